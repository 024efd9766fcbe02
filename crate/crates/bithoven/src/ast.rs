//! Located abstract syntax tree for Bithoven programs.
//!
//! Every node carries a [`Location`] pointing back into the original source
//! text; locations are part of the diagnostic contract, so passes never
//! invent or drop them. All types are immutable after construction.

use std::fmt;

/// A half-open byte span `[start, end)` into the source, plus the 1-based
/// line and column of the first character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Location {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

impl Location {
    pub fn new(start: usize, end: usize, line: u32, column: u32) -> Self {
        Location { start, end, line, column }
    }

    /// Span covering both locations, anchored at `self`'s first character.
    pub fn to(self, other: Location) -> Location {
        Location {
            start: self.start,
            end: other.end,
            line: self.line,
            column: self.column,
        }
    }
}

/// The five value types of the language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Type {
    Num,
    Bool,
    String,
    Sig,
    Pubkey,
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Type::Num => "num",
            Type::Bool => "bool",
            Type::String => "string",
            Type::Sig => "sig",
            Type::Pubkey => "pubkey",
        };
        f.write_str(name)
    }
}

/// Compilation target selected by the `pragma bithoven target` directive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Legacy,
    Segwit,
    Taproot,
}

impl Target {
    pub fn from_name(name: &str) -> Option<Target> {
        match name {
            "legacy" => Some(Target::Legacy),
            "segwit" => Some(Target::Segwit),
            "taproot" => Some(Target::Taproot),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Legacy => "legacy",
            Target::Segwit => "segwit",
            Target::Taproot => "taproot",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PragmaKind {
    Version(String),
    Target(Target),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pragma {
    pub loc: Location,
    pub kind: PragmaKind,
}

/// One `name: type` entry of a stack declaration. The location spans the
/// name through the type keyword.
#[derive(Debug, Clone, PartialEq)]
pub struct StackParam {
    pub loc: Location,
    pub name: String,
    pub ty: Type,
}

/// A parenthesized input-stack declaration. The first parameter is bound to
/// the top of the witness stack at execution time.
#[derive(Debug, Clone, PartialEq)]
pub struct StackDecl {
    pub loc: Location,
    pub params: Vec<StackParam>,
}

impl StackDecl {
    pub fn param(&self, name: &str) -> Option<&StackParam> {
        self.params.iter().find(|p| p.name == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub loc: Location,
    pub pragmas: Vec<Pragma>,
    pub decls: Vec<StackDecl>,
    pub body: Vec<Statement>,
}

impl Program {
    /// Target named by the (validated, unique) target pragma.
    pub fn target(&self) -> Target {
        self.pragmas
            .iter()
            .find_map(|p| match p.kind {
                PragmaKind::Target(t) => Some(t),
                PragmaKind::Version(_) => None,
            })
            .unwrap_or(Target::Segwit)
    }

    pub fn version(&self) -> Option<&str> {
        self.pragmas.iter().find_map(|p| match &p.kind {
            PragmaKind::Version(v) => Some(v.as_str()),
            PragmaKind::Target(_) => None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Max,
    Min,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

impl BinaryOp {
    pub fn is_math(self) -> bool {
        matches!(self, BinaryOp::Add | BinaryOp::Sub | BinaryOp::Max | BinaryOp::Min)
    }

    pub fn is_compare(self) -> bool {
        matches!(
            self,
            BinaryOp::Eq | BinaryOp::Ne | BinaryOp::Lt | BinaryOp::Le | BinaryOp::Gt | BinaryOp::Ge
        )
    }

    /// `<`, `<=`, `>`, `>=` — restricted to numeric operands.
    pub fn is_ordering(self) -> bool {
        matches!(self, BinaryOp::Lt | BinaryOp::Le | BinaryOp::Gt | BinaryOp::Ge)
    }

    pub fn is_logical(self) -> bool {
        matches!(self, BinaryOp::And | BinaryOp::Or)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Max => "max",
            BinaryOp::Min => "min",
            BinaryOp::Eq => "==",
            BinaryOp::Ne => "!=",
            BinaryOp::Lt => "<",
            BinaryOp::Le => "<=",
            BinaryOp::Gt => ">",
            BinaryOp::Ge => ">=",
            BinaryOp::And => "&&",
            BinaryOp::Or => "||",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Negate,
    Abs,
    Inc,
    Dec,
    Not,
    Sha256,
    Ripemd160,
    Len,
}

impl UnaryOp {
    pub fn is_math(self) -> bool {
        matches!(self, UnaryOp::Negate | UnaryOp::Abs | UnaryOp::Inc | UnaryOp::Dec)
    }

    pub fn is_crypto(self) -> bool {
        matches!(self, UnaryOp::Sha256 | UnaryOp::Ripemd160)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Negate => "negate",
            UnaryOp::Abs => "abs",
            UnaryOp::Inc => "++",
            UnaryOp::Dec => "--",
            UnaryOp::Not => "!",
            UnaryOp::Sha256 => "sha256",
            UnaryOp::Ripemd160 => "ripemd160",
            UnaryOp::Len => "len",
        }
    }
}

/// Argument structure of a `checksig` expression: either a single
/// signature/key pair or an m-of-n threshold over explicit pairs.
#[derive(Debug, Clone, PartialEq)]
pub enum SigFactor {
    Single {
        loc: Location,
        sig: Box<Expression>,
        pubkey: Box<Expression>,
    },
    Multi {
        loc: Location,
        threshold: i64,
        threshold_loc: Location,
        pairs: Vec<(Expression, Expression)>,
    },
}

impl SigFactor {
    pub fn loc(&self) -> Location {
        match self {
            SigFactor::Single { loc, .. } | SigFactor::Multi { loc, .. } => *loc,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Num {
        loc: Location,
        value: i64,
    },
    Bool {
        loc: Location,
        value: bool,
    },
    Str {
        loc: Location,
        value: String,
    },
    Var {
        loc: Location,
        name: String,
    },
    Binary {
        loc: Location,
        op: BinaryOp,
        lhs: Box<Expression>,
        rhs: Box<Expression>,
    },
    Unary {
        loc: Location,
        op: UnaryOp,
        operand: Box<Expression>,
    },
    CheckSig {
        loc: Location,
        factor: SigFactor,
    },
}

impl Expression {
    pub fn loc(&self) -> Location {
        match self {
            Expression::Num { loc, .. }
            | Expression::Bool { loc, .. }
            | Expression::Str { loc, .. }
            | Expression::Var { loc, .. }
            | Expression::Binary { loc, .. }
            | Expression::Unary { loc, .. }
            | Expression::CheckSig { loc, .. } => *loc,
        }
    }

    /// True if any node of this subtree is a `checksig` expression.
    pub fn contains_checksig(&self) -> bool {
        match self {
            Expression::CheckSig { .. } => true,
            Expression::Binary { lhs, rhs, .. } => {
                lhs.contains_checksig() || rhs.contains_checksig()
            }
            Expression::Unary { operand, .. } => operand.contains_checksig(),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LockKind {
    /// Relative timelock (`older`, CheckSequenceVerify).
    Csv,
    /// Absolute timelock (`after`, CheckLockTimeVerify).
    Cltv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    If {
        loc: Location,
        cond: Expression,
        then_block: Vec<Statement>,
        else_block: Vec<Statement>,
    },
    Verify {
        loc: Location,
        expr: Expression,
    },
    Lock {
        loc: Location,
        kind: LockKind,
        operand: u64,
        operand_loc: Location,
    },
    Return {
        loc: Location,
        expr: Expression,
    },
}

impl Statement {
    pub fn loc(&self) -> Location {
        match self {
            Statement::If { loc, .. }
            | Statement::Verify { loc, .. }
            | Statement::Lock { loc, .. }
            | Statement::Return { loc, .. } => *loc,
        }
    }
}
