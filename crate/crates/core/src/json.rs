//! JSON forms of scalars, matrices and framed links.

use crate::braid::{BraidWord, ColoredFramedLink, LinkComponent};
use crate::error::{Result, TljError};
use crate::linalg::SMatrix;
use crate::scalars::{cyclo_field, Cyclo, LaurentPoly, QPoly, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| TljError::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| TljError::Parse(format!("not an integer: {s:?}"))),
        _ => Err(TljError::Parse(format!("not an integer: {v}"))),
    }
}

fn term_json(exp: i64, c: &BigRational) -> Value {
    json!([exp, int_json(c.numer()), int_json(c.denom())])
}

fn terms_from(v: &Value) -> Result<Vec<(i64, BigRational)>> {
    let arr = v.as_array().ok_or_else(|| TljError::Parse("coefficient list must be an array".into()))?;
    arr.iter()
        .map(|t| {
            let t = t
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| TljError::Parse(format!("term must be [exp, num, den], got {t}")))?;
            let exp = t[0].as_i64().ok_or_else(|| TljError::Parse(format!("bad exponent {}", t[0])))?;
            let den = int_from(&t[2])?;
            if den.is_zero() {
                return Err(TljError::Parse("zero denominator".into()));
            }
            Ok((exp, BigRational::new(int_from(&t[1])?, den)))
        })
        .collect()
}

pub fn complex_json(c: Complex64) -> Value {
    json!([c.re, c.im])
}

/// `{"kind", "order", "embed", "numerator", "approx"}` for cyclotomic values,
/// `{"kind", "numerator", "denominator", "approx"}` for rational functions of `A`.
/// `approx` is null for a non-constant rational function.
pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Cyclo(c) => {
            let f = c.field();
            let num: Vec<Value> = c
                .residue()
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| term_json(k as i64, v))
                .collect();
            json!({
                "kind": "cyclotomic",
                "order": f.order(),
                "embed": f.embed(),
                "numerator": num,
                "approx": complex_json(c.to_c64()),
            })
        }
        Scalar::Func(f) => {
            let (n, d) = f.laurent_parts();
            let list = |p: &LaurentPoly| p.terms().map(|(e, c)| term_json(e, c)).collect::<Vec<_>>();
            let approx = s.to_c64().map(complex_json).unwrap_or(Value::Null);
            json!({
                "kind": "rational_function",
                "numerator": list(&n),
                "denominator": list(&d),
                "approx": approx,
            })
        }
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| TljError::Parse("missing kind".into()))?;
    let num = terms_from(v.get("numerator").ok_or_else(|| TljError::Parse("missing numerator".into()))?)?;
    match kind {
        "cyclotomic" => {
            let order =
                v.get("order").and_then(Value::as_u64).ok_or_else(|| TljError::Parse("missing order".into()))?;
            let embed = v.get("embed").and_then(Value::as_i64).unwrap_or(1);
            let field = cyclo_field(order, embed)?;
            let deg = num.iter().map(|(e, _)| *e).max().unwrap_or(0);
            if num.iter().any(|(e, _)| *e < 0) {
                return Err(TljError::Parse("negative exponent in a cyclotomic residue".into()));
            }
            let mut coeffs = vec![BigRational::zero(); deg as usize + 1];
            for (e, c) in num {
                coeffs[e as usize] += c;
            }
            Ok(Scalar::Cyclo(Cyclo::from_poly(&field, &QPoly::from_coeffs(coeffs))))
        }
        "rational_function" => {
            let den = match v.get("denominator") {
                Some(d) => terms_from(d)?,
                None => vec![(0, BigRational::from_integer(1.into()))],
            };
            let n = Scalar::from_laurent(&LaurentPoly::from_terms(num));
            let d = Scalar::from_laurent(&LaurentPoly::from_terms(den));
            if d.is_zero() {
                return Err(TljError::Parse("zero denominator".into()));
            }
            Ok(&n / &d)
        }
        k => Err(TljError::Parse(format!("unknown scalar kind {k:?}"))),
    }
}

pub fn matrix_to_json(m: &SMatrix) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(scalar_to_json).collect())).collect())
}

/// `{"strands": n, "word": [..], "components": [{"framing": f, "color": i}, ...]}`.
/// Without `components`, every component gets framing 0 and color 1.
pub fn link_from_json(v: &Value) -> Result<ColoredFramedLink> {
    let strands =
        v.get("strands").and_then(Value::as_u64).ok_or_else(|| TljError::Parse("missing strands".into()))? as usize;
    let word = v
        .get("word")
        .and_then(Value::as_array)
        .ok_or_else(|| TljError::Parse("missing word".into()))?
        .iter()
        .map(|x| {
            x.as_i64().and_then(|x| i32::try_from(x).ok()).ok_or_else(|| TljError::Parse(format!("bad letter {x}")))
        })
        .collect::<Result<Vec<i32>>>()?;
    let braid = BraidWord::new(strands, word)?;
    match v.get("components") {
        None => Ok(ColoredFramedLink::uniform(braid, 0, 1)),
        Some(c) => {
            let comps = c
                .as_array()
                .ok_or_else(|| TljError::Parse("components must be an array".into()))?
                .iter()
                .map(|c| {
                    let framing = c.get("framing").and_then(Value::as_i64).unwrap_or(0);
                    let color = c.get("color").and_then(Value::as_u64).unwrap_or(1) as usize;
                    Ok(LinkComponent { framing, color })
                })
                .collect::<Result<Vec<_>>>()?;
            ColoredFramedLink::new(braid, comps)
        }
    }
}

pub fn parse_link(text: &str) -> Result<ColoredFramedLink> {
    let v: Value = serde_json::from_str(text).map_err(|e| TljError::Parse(e.to_string()))?;
    link_from_json(&v)
}

pub fn link_to_json(l: &ColoredFramedLink) -> Value {
    json!({
        "strands": l.braid().strands(),
        "word": l.braid().word(),
        "components": l.components().iter().map(|c| json!({"framing": c.framing, "color": c.color})).collect::<Vec<_>>(),
    })
}

/// Comma-separated braid letters; the empty string is the trivial word.
pub fn parse_word(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| TljError::Parse(format!("bad braid letter {t:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;

    #[test]
    fn cyclotomic_round_trip() {
        let ctx = Context::root(16, 3).unwrap();
        let x = &ctx.a_pow(5).unwrap() + &ctx.delta(2);
        let j = scalar_to_json(&x);
        assert_eq!(j["kind"], "cyclotomic");
        assert_eq!(j["order"], 16);
        assert_eq!(scalar_from_json(&j).unwrap(), x);
    }

    #[test]
    fn rational_function_round_trip() {
        let ctx = Context::generic();
        let x = &ctx.delta(3) / &ctx.delta(2);
        let j = scalar_to_json(&x);
        assert_eq!(j["approx"], Value::Null);
        assert_eq!(scalar_from_json(&j).unwrap(), x);
        let c = scalar_to_json(&Scalar::from_i64(-7));
        assert_eq!(c["approx"], json!([-7.0, 0.0]));
    }

    #[test]
    fn links() {
        let l =
            parse_link(r#"{"strands":2,"word":[1,1],"components":[{"framing":0,"color":1},{"framing":2,"color":3}]}"#)
                .unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.components()[1], LinkComponent { framing: 2, color: 3 });
        assert_eq!(parse_link(&link_to_json(&l).to_string()).unwrap(), l);
        assert!(parse_link(r#"{"strands":2,"word":[1],"components":[{},{}]}"#).is_err());
        assert!(matches!(parse_link(r#"{"strands":2,"word":[9]}"#), Err(TljError::IndexOutOfRange(_))));
        assert!(matches!(parse_link("{"), Err(TljError::Parse(_))));
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("1,-2, 1").unwrap(), vec![1, -2, 1]);
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("x").is_err());
    }
}
