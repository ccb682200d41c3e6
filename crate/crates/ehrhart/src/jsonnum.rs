//! Serde helpers for exact numbers.
//!
//! Integers serialize as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input. Rationals
//! always serialize as `"p/q"` strings in lowest terms.

use crate::{Int, Rat};
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Unexpected};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

pub(crate) fn serialize_int<S: Serializer>(x: &Int, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

struct IntVisitor;

impl<'de> de::Visitor<'de> for IntVisitor {
    type Value = Int;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Int, E> {
        Ok(Int::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Int, E> {
        Ok(Int::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Int, E> {
        v.parse::<Int>()
            .map_err(|_| E::invalid_value(Unexpected::Str(v), &self))
    }
}

pub(crate) fn deserialize_int<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
    d.deserialize_any(IntVisitor)
}

/// An `Int` field: number when small, decimal string when large.
pub(crate) mod int {
    pub(crate) use super::serialize_int as serialize;
}

/// A `Vec<Int>` field.
pub(crate) mod int_vec {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&IntJson(x.clone()))?;
        }
        seq.end()
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Int>, D::Error> {
        let raw = Vec::<IntJson>::deserialize(d)?;
        Ok(raw.into_iter().map(|x| x.0).collect())
    }
}

/// A `Vec<Rat>` field, each entry `"p/q"` in lowest terms.
pub(crate) mod rat_vec {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect();
        strs.serialize(s)
    }
}

/// Wrapper so `Int` can sit inside derived containers.
#[derive(Clone, Debug)]
pub(crate) struct IntJson(pub(crate) Int);

impl Serialize for IntJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_int(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for IntJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize_int(d).map(IntJson)
    }
}
