//! `{"variables": [...], "terms": [{"exp": [...], "re": "p/q", "im": "r/s"}]}`
//! with terms in descending graded-lexicographic order.

use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use super::MultiPoly;
use crate::scalars::{rational_str, GaussianRational, Rational};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    #[serde(with = "rational_str")]
    re: Rational,
    #[serde(with = "rational_str")]
    im: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    variables: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            variables: self.vars.clone(),
            terms: self
                .terms_grlex_desc()
                .into_iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    re: c.re.clone(),
                    im: c.im.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let n = repr.variables.len();
        for t in &repr.terms {
            if t.exp.len() != n {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} for {} variables",
                    t.exp.len(),
                    n
                )));
            }
        }
        Ok(MultiPoly::from_terms_owned(
            repr.variables,
            repr.terms
                .into_iter()
                .map(|t| (t.exp, GaussianRational::new(t.re, t.im))),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn grlex_descending_layout() {
        let p = parse_poly("z0*z3 - z1*z2 + 1/2*i", &["z0", "z1", "z2", "z3"]).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "variables": ["z0", "z1", "z2", "z3"],
                "terms": [
                    {"exp": [1, 0, 0, 1], "re": "1", "im": "0"},
                    {"exp": [0, 1, 1, 0], "re": "-1", "im": "0"},
                    {"exp": [0, 0, 0, 0], "re": "0", "im": "1/2"},
                ]
            })
        );
        let back: MultiPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_bad_exponent_length() {
        let v = serde_json::json!({"variables": ["v"], "terms": [{"exp": [1, 2], "re": "1", "im": "0"}]});
        assert!(serde_json::from_value::<MultiPoly>(v).is_err());
    }
}
