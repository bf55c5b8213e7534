//! JSON and LaTeX renderings of classes and limit results.

use rankone_core::{Atom, CycleB, LimitResult, MonoB, Rational, Symbol};
use serde_json::{json, Value};

/// How symbols and operators are spelled in LaTeX output.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Notation {
    /// `F_B`, `c_1(J)`, Beauville components as superscripts.
    #[default]
    Paper,
    /// `\mathcal{F}`, `\gamma`, bigrades as subscripts.
    Short,
}

pub fn rational_json(c: &Rational) -> Value {
    Value::String(c.to_fraction_string())
}

fn symbol_json(s: &Symbol) -> Value {
    json!({"kind": "sym", "name": s.name(), "grade": [s.grade().codim, s.grade().weight]})
}

fn atom_json(a: &Atom, power: u32) -> Value {
    let mut v = match a {
        Atom::Sym(s) => symbol_json(s),
        Atom::Gamma => json!({"kind": "gamma"}),
        Atom::Star(x, y) => json!({"kind": "star", "left": symbol_json(x), "right": symbol_json(y)}),
        Atom::Fb(m) => json!({"kind": "FB", "arg": [term_json(m, &Rational::one())]}),
    };
    v["power"] = json!(power);
    v
}

fn term_json(m: &MonoB, c: &Rational) -> Value {
    let atoms: Vec<Value> = m.factors().iter().map(|(a, k)| atom_json(a, *k)).collect();
    json!({"coeff": rational_json(c), "atoms": atoms})
}

/// A class as a list of `{"coeff", "atoms"}` terms in canonical order.
pub fn cycle_json(x: &CycleB) -> Value {
    Value::Array(x.terms().map(|(m, c)| term_json(m, c)).collect())
}

pub fn limit_json(r: &LimitResult, route: &str) -> Value {
    json!({
        "g": r.g,
        "mode": r.mode.as_str(),
        "route": route,
        "a": cycle_json(&r.a),
        "b": cycle_json(&r.b),
    })
}

fn latex_symbol(s: &Symbol, n: Notation) -> String {
    let g = s.grade();
    if s.is_point() {
        return "[\\mathrm{pt}]".to_string();
    }
    match n {
        Notation::Paper => format!("{}^{{({})}}_{{{}}}", s.name(), g.weight, g.codim),
        Notation::Short => format!("{}_{{{},{}}}", s.name(), g.codim, g.weight),
    }
}

fn latex_atom(a: &Atom, n: Notation) -> String {
    match a {
        Atom::Sym(s) => latex_symbol(s, n),
        Atom::Gamma => match n {
            Notation::Paper => "c_1(J)".to_string(),
            Notation::Short => "\\gamma".to_string(),
        },
        Atom::Star(x, y) => format!("({} \\star {})", latex_symbol(x, n), latex_symbol(y, n)),
        Atom::Fb(m) => {
            let op = match n {
                Notation::Paper => "F_B",
                Notation::Short => "\\mathcal{F}",
            };
            format!("{op}\\bigl({}\\bigr)", latex_monomial(m, n))
        }
    }
}

fn latex_monomial(m: &MonoB, n: Notation) -> String {
    let parts: Vec<String> = m
        .factors()
        .iter()
        .map(|(a, k)| {
            let base = latex_atom(a, n);
            match (k, a) {
                (1, _) => base,
                (_, Atom::Gamma) if n == Notation::Paper => format!("c_1(J)^{{{k}}}"),
                (_, Atom::Sym(_)) if n == Notation::Paper => format!("\\bigl({base}\\bigr)^{{{k}}}"),
                _ => format!("{base}^{{{k}}}"),
            }
        })
        .collect();
    parts.join(" \\cdot ")
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// A class on `B` as a LaTeX fragment; `0` when empty.
pub fn cycle_latex(x: &CycleB, n: Notation) -> String {
    let mut out = String::new();
    for (i, (m, c)) in x.terms().enumerate() {
        let abs = c.abs();
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.factors().is_empty() {
            out.push_str(&latex_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&latex_monomial(m, n));
        } else {
            out.push_str(&format!("{} {}", latex_rational(&abs), latex_monomial(m, n)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `nu_*(q^*(a) + q^*(b) . eta)`.
pub fn pair_latex(a: &CycleB, b: &CycleB, n: Notation) -> String {
    format!(
        "\\nu_*\\bigl(q^*({}) + q^*({})\\cdot\\eta\\bigr)",
        cycle_latex(a, n),
        cycle_latex(b, n)
    )
}

pub fn limit_latex(r: &LimitResult, n: Notation) -> String {
    pair_latex(&r.a, &r.b, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rankone_core::limit::limit_fm_alg;

    #[test]
    fn json_shape() {
        let d = 1;
        let z = CycleB::symbol("z", 1, 1, d).unwrap();
        let w = CycleB::symbol("w", 0, 0, d).unwrap();
        let r = limit_fm_alg(&z, &w, 2);
        let v = limit_json(&r, "closed");
        assert_eq!(v["mode"], "algebraic");
        assert_eq!(v["a"][0]["coeff"], "1/1");
        assert_eq!(v["a"][0]["atoms"][0]["kind"], "FB");
        assert_eq!(v["b"][0]["coeff"], "-1/1");
        assert_eq!(v["b"][0]["atoms"][0]["arg"][0]["atoms"][0]["grade"], json!([1, 1]));
    }

    #[test]
    fn latex_forms() {
        let d = 1;
        let x = &CycleB::symbol("z", 1, 1, d).unwrap().fb()
            - &(&CycleB::gamma(d) * &CycleB::one(d)).scale(&Rational::new(1, 2));
        assert_eq!(
            cycle_latex(&x, Notation::Paper),
            "F_B\\bigl(z^{(1)}_{1}\\bigr) - \\frac{1}{2} c_1(J)"
        );
        assert_eq!(
            cycle_latex(&x, Notation::Short),
            "\\mathcal{F}\\bigl(z_{1,1}\\bigr) - \\frac{1}{2} \\gamma"
        );
        assert_eq!(cycle_latex(&CycleB::zero(d), Notation::Short), "0");
    }
}
