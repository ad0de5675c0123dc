//! Exchange format for type-α representations.
//!
//! ```json
//! { "n": 1, "alpha": ["0", "1"],
//!   "t_part": [{"lo": 0, "lo_kind": "closed", "hi": 1, "hi_kind": "closed"}],
//!   "families": [{"segment": 0, "side": "right", "anchor": 1, "anchor_kind": "closed"}] }
//! ```
//!
//! `alpha` is optional and defaults to `a_i = i/n`; rationals are written
//! `"p/q"`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::Rational;
use crate::type_alpha::{Alpha, BreakSummand, FamilyChoice, TypeAlphaError, TypeAlphaRep};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("n must be at least 1")]
    NoSegments,
    #[error("alpha has {got} entries, expected n+1 = {expected}")]
    AlphaLength { got: usize, expected: usize },
    #[error("cannot parse rational {0:?}")]
    Rational(String),
    #[error(transparent)]
    Alpha(#[from] TypeAlphaError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    pub t_part: Vec<BreakSummand>,
    pub families: Vec<FamilyChoice>,
}

impl RepJson {
    pub fn from_rep(r: &TypeAlphaRep) -> RepJson {
        RepJson {
            n: r.n(),
            alpha: Some(r.alpha.breakpoints().iter().map(|b| b.to_string()).collect()),
            t_part: r.t_part.clone(),
            families: r.families.clone(),
        }
    }

    /// Builds the (not yet validated) representation.
    pub fn into_rep(self) -> Result<TypeAlphaRep, JsonError> {
        if self.n == 0 {
            return Err(JsonError::NoSegments);
        }
        let alpha = match self.alpha {
            None => Alpha::uniform(self.n),
            Some(values) => {
                if values.len() != self.n + 1 {
                    return Err(JsonError::AlphaLength { got: values.len(), expected: self.n + 1 });
                }
                let parsed = values
                    .iter()
                    .map(|v| Rational::from_str(v.trim()).map_err(|_| JsonError::Rational(v.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Alpha::new(parsed)?
            }
        };
        Ok(TypeAlphaRep::new(alpha, self.t_part, self.families))
    }
}

pub fn parse_rep(text: &str) -> Result<TypeAlphaRep, JsonError> {
    serde_json::from_str::<RepJson>(text)?.into_rep()
}

pub fn rep_to_json(r: &TypeAlphaRep) -> serde_json::Value {
    serde_json::to_value(RepJson::from_rep(r)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::BoundaryKind::{Closed, Open};
    use crate::type_alpha::Side;

    #[test]
    fn parses_index_schema() {
        let text = r#"{"n": 2, "alpha": ["0", "1/3", "1"],
            "t_part": [{"lo": 0, "lo_kind": "open", "hi": 2, "hi_kind": "closed"}],
            "families": [{"segment": 1, "side": "left", "anchor": 0, "anchor_kind": "open"}]}"#;
        let r = parse_rep(text).unwrap();
        assert_eq!(r.alpha.breakpoints()[1], Rational::new(1, 3));
        assert_eq!(r.t_part, vec![BreakSummand::new(0, Open, 2, Closed)]);
        assert_eq!(r.families, vec![FamilyChoice::new(1, Side::Left, 0, Open)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_rep("{"), Err(JsonError::Syntax(_))));
        assert!(matches!(parse_rep(r#"{"n":1,"t_part":[],"families":[],"extra":1}"#), Err(JsonError::Syntax(_))));
        assert!(matches!(parse_rep(r#"{"n":0,"t_part":[],"families":[]}"#), Err(JsonError::NoSegments)));
        assert!(matches!(
            parse_rep(r#"{"n":1,"alpha":["0"],"t_part":[],"families":[]}"#),
            Err(JsonError::AlphaLength { .. })
        ));
        assert!(matches!(
            parse_rep(r#"{"n":1,"alpha":["0","x"],"t_part":[],"families":[]}"#),
            Err(JsonError::Rational(_))
        ));
        assert!(matches!(
            parse_rep(r#"{"n":1,"alpha":["0","2"],"t_part":[],"families":[]}"#),
            Err(JsonError::Alpha(TypeAlphaError::BadAlpha))
        ));
        assert!(matches!(
            parse_rep(r#"{"n":1,"t_part":[{"lo":0,"lo_kind":"half","hi":1,"hi_kind":"open"}],"families":[]}"#),
            Err(JsonError::Syntax(_))
        ));
    }
}
