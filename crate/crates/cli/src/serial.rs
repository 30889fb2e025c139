//! JSON term lists: `[{"coefficient": "p/q", "even": [[gen, exp], ...], "odd": [gen, ...]}]`.
//! Odd factors are listed in increasing generator order, so each term is canonical.

use serde::{Deserialize, Serialize};
use superimmanant::superring::{Parity, SuperMonomial, SuperPoly};
use superimmanant::Q;

use crate::error::CliError;
use crate::expr::Context;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coefficient: String,
    pub even: Vec<(String, u32)>,
    pub odd: Vec<String>,
}

pub fn to_terms(p: &SuperPoly, ctx: &Context) -> Vec<TermJson> {
    p.terms()
        .map(|(m, c)| TermJson {
            coefficient: c.to_string(),
            even: m.even_part().iter().map(|&(g, e)| (ctx.name(g), e)).collect(),
            odd: m.odd_part().iter().map(|&g| ctx.name(g)).collect(),
        })
        .collect()
}

pub fn from_terms(terms: &[TermJson], ctx: &Context) -> Result<SuperPoly, CliError> {
    let lookup = |name: &str, want: Parity| {
        let g = ctx.generator(name).ok_or_else(|| CliError::Input(format!("undeclared generator {name}")))?;
        if g.parity != want {
            return Err(CliError::Input(format!("generator {name} listed as {want:?} but declared {:?}", g.parity)));
        }
        Ok(g)
    };
    let mut out = SuperPoly::zero();
    for t in terms {
        let c: Q = t.coefficient.parse().map_err(|_| CliError::Input(format!("bad coefficient {:?}", t.coefficient)))?;
        let mut word = Vec::new();
        for (name, e) in &t.even {
            if *e == 0 {
                return Err(CliError::Input(format!("zero exponent on {name}")));
            }
            let g = lookup(name, Parity::Even)?;
            word.extend(std::iter::repeat_n(g, *e as usize));
        }
        let mut odd = Vec::new();
        for name in &t.odd {
            odd.push(lookup(name, Parity::Odd)?);
        }
        if odd.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Input(format!("odd factors {:?} are not strictly increasing", t.odd)));
        }
        word.extend(odd);
        let (m, negate) = SuperMonomial::from_word(&word).ok_or_else(|| CliError::Input("degenerate monomial".into()))?;
        out.add_term(m, if negate { -c } else { c });
    }
    Ok(out)
}
