//! Structured node rendering for diagnostic messages.
//!
//! Diagnostics quote the offending AST node in a stable record syntax, e.g.
//! `StringLiteral(Location { start: 100, end: 106, line: 6, column: 13 }, "MATH")`.
//! The exact text is part of the observable compiler output, so these
//! renderers are written out by hand rather than derived.

use crate::ast::{
    BinaryOp, Expression, LockKind, Location, SigFactor, StackParam, Statement, Type, UnaryOp,
};

fn loc(l: Location) -> String {
    format!(
        "Location {{ start: {}, end: {}, line: {}, column: {} }}",
        l.start, l.end, l.line, l.column
    )
}

fn type_name(ty: Type) -> &'static str {
    match ty {
        Type::Num => "Number",
        Type::Bool => "Boolean",
        Type::String => "String",
        Type::Sig => "Signature",
        Type::Pubkey => "PublicKey",
    }
}

fn binary_op_name(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Add => "Add",
        BinaryOp::Sub => "Sub",
        BinaryOp::Max => "Max",
        BinaryOp::Min => "Min",
        BinaryOp::Eq => "Eq",
        BinaryOp::Ne => "Ne",
        BinaryOp::Lt => "Lt",
        BinaryOp::Le => "Le",
        BinaryOp::Gt => "Gt",
        BinaryOp::Ge => "Ge",
        BinaryOp::And => "And",
        BinaryOp::Or => "Or",
    }
}

fn unary_op_name(op: UnaryOp) -> &'static str {
    match op {
        UnaryOp::Negate => "Negate",
        UnaryOp::Abs => "Abs",
        UnaryOp::Inc => "Inc",
        UnaryOp::Dec => "Dec",
        UnaryOp::Not => "Not",
        UnaryOp::Sha256 => "Sha256",
        UnaryOp::Ripemd160 => "Ripemd160",
        UnaryOp::Len => "Len",
    }
}

pub fn render_expr(e: &Expression) -> String {
    match e {
        Expression::Num { loc: l, value } => format!("NumberLiteral({}, {})", loc(*l), value),
        Expression::Bool { loc: l, value } => format!("BooleanLiteral({}, {})", loc(*l), value),
        Expression::Str { loc: l, value } => format!("StringLiteral({}, \"{}\")", loc(*l), value),
        Expression::Var { loc: l, name } => {
            format!("Variable({}, Identifier(\"{}\"))", loc(*l), name)
        }
        Expression::Binary { loc: l, op, lhs, rhs } => format!(
            "BinaryExpression {{ loc: {}, lhs: {}, rhs: {}, op: {} }}",
            loc(*l),
            render_expr(lhs),
            render_expr(rhs),
            binary_op_name(*op)
        ),
        Expression::Unary { loc: l, op, operand } => format!(
            "UnaryMathExpression {{ loc: {}, operand: {}, op: {} }}",
            loc(*l),
            render_expr(operand),
            unary_op_name(*op)
        ),
        Expression::CheckSig { loc: l, factor } => format!(
            "CheckSigExpression {{ loc: {}, operand: {}, op: CheckSig }}",
            loc(*l),
            render_factor(factor)
        ),
    }
}

pub fn render_factor(f: &SigFactor) -> String {
    match f {
        SigFactor::Single { loc: l, sig, pubkey } => format!(
            "SingleSigFactor {{ loc: {}, sig: {}, pubkey: {} }}",
            loc(*l),
            render_expr(sig),
            render_expr(pubkey)
        ),
        SigFactor::Multi { loc: l, threshold, pairs, .. } => {
            let rendered: Vec<String> = pairs
                .iter()
                .map(|(s, p)| format!("({}, {})", render_expr(s), render_expr(p)))
                .collect();
            format!(
                "MultiSigFactor {{ loc: {}, threshold: {}, pairs: [{}] }}",
                loc(*l),
                threshold,
                rendered.join(", ")
            )
        }
    }
}

pub fn render_stmt(s: &Statement) -> String {
    match s {
        Statement::If { loc: l, cond, .. } => format!(
            "IfStatement {{ loc: {}, condition: {} }}",
            loc(*l),
            render_expr(cond)
        ),
        Statement::Verify { loc: l, expr } => format!(
            "VerifyStatement {{ loc: {}, operand: {} }}",
            loc(*l),
            render_expr(expr)
        ),
        Statement::Lock { loc: l, kind, operand, .. } => {
            let op = match kind {
                LockKind::Csv => "Csv",
                LockKind::Cltv => "Cltv",
            };
            format!(
                "LocktimeStatement {{ loc: {}, operand: {}, op: {} }}",
                loc(*l),
                operand,
                op
            )
        }
        Statement::Return { loc: l, expr } => format!(
            "ExpressionStatement {{ loc: {}, operand: {} }}",
            loc(*l),
            render_expr(expr)
        ),
    }
}

/// Parameter entries are rendered with a bare identifier, matching the
/// shape used by stack-related diagnostics.
pub fn render_param(p: &StackParam) -> String {
    format!(
        "StackParam {{ loc: {}, identifier: Identifier({}), ty: {} }}",
        loc(p.loc),
        p.name,
        type_name(p.ty)
    )
}

pub fn render_params(params: &[StackParam]) -> String {
    let rendered: Vec<String> = params.iter().map(render_param).collect();
    format!("[{}]", rendered.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_literal_render() {
        let e = Expression::Str {
            loc: Location::new(100, 106, 6, 13),
            value: "MATH".into(),
        };
        assert_eq!(
            render_expr(&e),
            "StringLiteral(Location { start: 100, end: 106, line: 6, column: 13 }, \"MATH\")"
        );
    }

    #[test]
    fn stack_param_render() {
        let p = StackParam {
            loc: Location::new(64, 79, 4, 2),
            name: "condition".into(),
            ty: Type::Bool,
        };
        assert_eq!(
            render_param(&p),
            "StackParam { loc: Location { start: 64, end: 79, line: 4, column: 2 }, \
             identifier: Identifier(condition), ty: Boolean }"
        );
    }

    #[test]
    fn locktime_statement_render() {
        let s = Statement::Lock {
            loc: Location::new(195, 206, 7, 5),
            kind: LockKind::Csv,
            operand: 1000,
            operand_loc: Location::new(201, 205, 7, 11),
        };
        assert_eq!(
            render_stmt(&s),
            "LocktimeStatement { loc: Location { start: 195, end: 206, line: 7, column: 5 }, \
             operand: 1000, op: Csv }"
        );
    }
}
