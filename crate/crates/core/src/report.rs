//! Canonical output: sorted-key JSON with every float at 17 significant
//! digits, and the matching CSV number format.

use std::io;

use num_complex::Complex64;
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};
use serde_json::ser::Formatter;

/// `x` with 17 significant digits, e.g. `1.1461932206205825e0`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Serialize `value` as compact JSON with keys in lexicographic order and
/// fixed float formatting, so equal values give byte-identical text.
pub fn to_canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    // Value's map is ordered by key
    let tree = serde_json::to_value(value)?;
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats);
    tree.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("JSON is UTF-8"))
}

pub fn ser_c64<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

pub fn ser_opt_c64<S: Serializer>(z: &Option<Complex64>, s: S) -> Result<S::Ok, S::Error> {
    match z {
        Some(z) => ser_c64(z, s),
        None => s.serialize_none(),
    }
}

pub fn ser_vec_c64<S: Serializer>(zs: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    let pairs: Vec<[f64; 2]> = zs.iter().map(|z| [z.re, z.im]).collect();
    pairs.serialize(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Sample {
        zeta: f64,
        alpha: Vec<f64>,
        #[serde(serialize_with = "ser_c64")]
        point: Complex64,
        missing: Option<f64>,
    }

    #[test]
    fn floats_have_seventeen_digits_and_keys_are_sorted() {
        let s = Sample {
            zeta: 0.1,
            alpha: vec![1.0, -2.5e-300],
            point: Complex64::new(std::f64::consts::PI, 0.0),
            missing: None,
        };
        let json = to_canonical_json(&s).unwrap();
        assert_eq!(
            json,
            "{\"alpha\":[1.0000000000000000e0,-2.5000000000000000e-300],\"missing\":null,\
             \"point\":[3.1415926535897931e0,0.0000000000000000e0],\"zeta\":1.0000000000000001e-1}\n"
        );
        let back: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(back["zeta"].as_f64(), Some(0.1));
    }

    #[test]
    fn fmt_round_trips_bits() {
        for x in [0.1, 1.0 / 3.0, 1.146_193_220_620_582_5, -7.341_435_092_197_778, 5e-324] {
            let y: f64 = fmt_f64(x).parse().unwrap();
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }
}
