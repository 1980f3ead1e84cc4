use super::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Style {
    Ascii,
    Unicode,
}

struct Glyphs {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    tri: &'static str,
    nec: &'static str,
}

const ASCII: Glyphs = Glyphs { not: "~", and: " & ", or: " | ", tri: "#", nec: "[]" };
const UNICODE: Glyphs = Glyphs { not: "¬", and: " ∧ ", or: " ∨ ", tri: "▲", nec: "□" };

// Binding strength: atoms and unary forms bind tightest.
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNARY: u8 = 3;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        _ => PREC_UNARY,
    }
}

pub(crate) fn render(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    write_formula(f, style, &mut out);
    out
}

fn write_formula(f: &Formula, style: Style, out: &mut String) {
    let g = match style {
        Style::Ascii => &ASCII,
        Style::Unicode => &UNICODE,
    };
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Not(inner) => {
            if style == Style::Unicode {
                // ▽φ and ◇φ are printed back in their short forms.
                if let Formula::Tri(body) = inner.as_ref() {
                    out.push('▽');
                    return write_operand(body, PREC_UNARY, style, out);
                }
                if let Formula::Nec(body) = inner.as_ref() {
                    if let Formula::Not(body) = body.as_ref() {
                        out.push('◇');
                        return write_operand(body, PREC_UNARY, style, out);
                    }
                }
            }
            out.push_str(g.not);
            write_operand(inner, PREC_UNARY, style, out);
        }
        Formula::Tri(inner) => {
            out.push_str(g.tri);
            write_operand(inner, PREC_UNARY, style, out);
        }
        Formula::Nec(inner) => {
            out.push_str(g.nec);
            write_operand(inner, PREC_UNARY, style, out);
        }
        Formula::And(a, b) => {
            write_operand(a, PREC_AND, style, out);
            out.push_str(g.and);
            // left-associative: a right operand at the same level needs parentheses
            write_operand(b, PREC_AND + 1, style, out);
        }
        Formula::Or(a, b) => {
            write_operand(a, PREC_OR, style, out);
            out.push_str(g.or);
            write_operand(b, PREC_OR + 1, style, out);
        }
    }
}

fn write_operand(f: &Formula, min_prec: u8, style: Style, out: &mut String) {
    if precedence(f) < min_prec {
        out.push('(');
        write_formula(f, style, out);
        out.push(')');
    } else {
        write_formula(f, style, out);
    }
}
