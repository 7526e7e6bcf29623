//! JSON interchange format.
//!
//! ```json
//! {"name": "I1", "elements": ["-", "1"], "mul": [[0, 0], [0, 1]],
//!  "star": [0, 1], "one": 1, "zero": 0}
//! ```

use serde_json::Value;

use super::FiniteRRMonoid;
use crate::error::{Error, Result};

fn field<'a>(obj: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::parse(key, "missing key"))
}

fn index(v: &Value, key: &str, bound: usize) -> Result<usize> {
    let i = v
        .as_u64()
        .ok_or_else(|| Error::parse(key, format!("expected a non-negative integer, got {}", v)))?;
    let i = usize::try_from(i).map_err(|_| Error::parse(key, "index too large"))?;
    if i >= bound {
        return Err(Error::parse(
            key,
            format!("index {} out of range for {} elements", i, bound),
        ));
    }
    Ok(i)
}

impl FiniteRRMonoid {
    /// Reads the interchange format. Ragged tables and out-of-range
    /// indices are reported as parse errors naming the offending key.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::parse("<document>", e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse("<document>", "expected a JSON object"))?;

        let name = field(obj, "name")?
            .as_str()
            .ok_or_else(|| Error::parse("name", "expected a string"))?
            .to_string();
        let elements: Vec<String> = field(obj, "elements")?
            .as_array()
            .ok_or_else(|| Error::parse("elements", "expected an array"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::parse("elements", "expected strings"))
            })
            .collect::<Result<_>>()?;
        let n = elements.len();
        if n == 0 {
            return Err(Error::parse("elements", "at least one element is required"));
        }

        let rows = field(obj, "mul")?
            .as_array()
            .ok_or_else(|| Error::parse("mul", "expected an array of rows"))?;
        if rows.len() != n {
            return Err(Error::parse(
                "mul",
                format!("{} rows for {} elements", rows.len(), n),
            ));
        }
        let mut mul = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| Error::parse("mul", format!("row {} is not an array", i)))?;
            if row.len() != n {
                return Err(Error::parse(
                    "mul",
                    format!("row {} has {} entries, expected {}", i, row.len(), n),
                ));
            }
            mul.push(
                row.iter()
                    .map(|v| index(v, "mul", n))
                    .collect::<Result<Vec<_>>>()?,
            );
        }

        let star_values = field(obj, "star")?
            .as_array()
            .ok_or_else(|| Error::parse("star", "expected an array"))?;
        if star_values.len() != n {
            return Err(Error::parse(
                "star",
                format!("{} entries for {} elements", star_values.len(), n),
            ));
        }
        let star = star_values
            .iter()
            .map(|v| index(v, "star", n))
            .collect::<Result<Vec<_>>>()?;
        let one = index(field(obj, "one")?, "one", n)?;
        let zero = match obj.get("zero") {
            None | Some(Value::Null) => None,
            Some(v) => Some(index(v, "zero", n)?),
        };
        FiniteRRMonoid::from_parts(name, elements, mul, star, one, zero)
    }

    /// Canonical serialization: one table row per line, keys in a fixed
    /// order, trailing newline.
    pub fn to_json(&self) -> String {
        let quote = |s: &str| Value::String(s.to_string()).to_string();
        let join = |xs: &[usize]| {
            xs.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let elements = self
            .element_names()
            .iter()
            .map(|e| quote(e))
            .collect::<Vec<_>>()
            .join(", ");
        let rows = self
            .elements()
            .map(|a| format!("    [{}]", join(self.mul_row(a))))
            .collect::<Vec<_>>()
            .join(",\n");
        let zero = self
            .zero()
            .map_or_else(|| "null".to_string(), |z| z.to_string());
        format!(
            "{{\n  \"name\": {},\n  \"elements\": [{}],\n  \"mul\": [\n{}\n  ],\n  \"star\": [{}],\n  \"one\": {},\n  \"zero\": {}\n}}\n",
            quote(self.name()),
            elements,
            rows,
            join(self.star_table()),
            self.one(),
            zero
        )
    }
}
