use std::fmt::Write;

use crate::model::{Argument, Assessment, ConditionalEvent, Formula};
use crate::numeric::render_rational;

/// Binding strength; higher binds tighter.
fn precedence(formula: &Formula) -> u8 {
    match formula {
        Formula::Implies(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        Formula::Not(_) => 4,
        Formula::True | Formula::False | Formula::Atom(_) => 5,
    }
}

fn child(out: &mut String, formula: &Formula, parens: bool) {
    if parens {
        out.push('(');
        write_formula(out, formula);
        out.push(')');
    } else {
        write_formula(out, formula);
    }
}

fn write_formula(out: &mut String, formula: &Formula) {
    let own = precedence(formula);
    match formula {
        Formula::True => out.push_str("true"),
        Formula::False => out.push_str("false"),
        Formula::Atom(name) => out.push_str(name),
        Formula::Not(inner) => {
            out.push_str("not ");
            child(out, inner, precedence(inner) < own);
        }
        // `and`/`or` associate to the left, `->` to the right.
        Formula::And(a, b) | Formula::Or(a, b) => {
            child(out, a, precedence(a) < own);
            out.push_str(if matches!(formula, Formula::And(..)) { " and " } else { " or " });
            child(out, b, precedence(b) <= own);
        }
        Formula::Implies(a, b) => {
            child(out, a, precedence(a) <= own);
            out.push_str(" -> ");
            child(out, b, precedence(b) < own);
        }
    }
}

/// Minimal-parenthesis text for a formula; re-parses to the same tree.
pub fn render_formula(formula: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, formula);
    out
}

fn render_event(event: &ConditionalEvent) -> String {
    if event.is_conditional() {
        format!("P({} | {})", render_formula(&event.consequent), render_formula(&event.antecedent))
    } else {
        format!("P({})", render_formula(&event.consequent))
    }
}

fn render_assessment(premise: &Assessment) -> String {
    let event = render_event(&premise.target);
    if premise.is_point() {
        format!("{event} = {}", render_rational(&premise.lower))
    } else {
        format!("{event} in [{}, {}]", render_rational(&premise.lower), render_rational(&premise.upper))
    }
}

/// Canonical `.arg` document for `argument`.
pub fn render_argument(argument: &Argument) -> String {
    let mut out = String::new();
    if let Some(label) = &argument.label {
        let _ = writeln!(out, "label: {label}");
    }
    let _ = writeln!(out, "atoms: {}", argument.atoms.join(", "));
    for constraint in &argument.constraints {
        let _ = writeln!(out, "constraint: {}", render_formula(constraint));
    }
    for premise in &argument.premises {
        let _ = writeln!(out, "premise: {}", render_assessment(premise));
    }
    let _ = writeln!(out, "conclusion: {}", render_event(&argument.conclusion));
    out
}
