use std::fs;

use uthopf::hopf::scf::{self, ScfElement};
use uthopf::{Error, Nuio, Result};

use crate::Operands;

/// Reads an element from either schema.
pub fn parse_element(text: &str) -> Result<ScfElement> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("terms").is_some() {
        scf::element_from_json(&value)
    } else {
        let pi: Nuio = serde_json::from_value(value)?;
        Ok(scf::delta(&pi))
    }
}

impl Operands {
    pub fn load(&self) -> Result<Vec<ScfElement>> {
        let mut out = Vec::new();
        for path in &self.input {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            out.push(parse_element(&text)?);
        }
        for p in &self.poset {
            out.push(parse_element(p)?);
        }
        Ok(out)
    }

    pub fn exactly<const N: usize>(&self) -> Result<[ScfElement; N]> {
        let got = self.load()?;
        let len = got.len();
        got.try_into()
            .map_err(|_| Error::Precondition(format!("expected {N} operand(s), got {len}")))
    }
}
