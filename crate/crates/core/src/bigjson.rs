//! JSON encoding for arbitrary-precision naturals: a number when it fits in
//! `u64`, a decimal string otherwise.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) => serializer.serialize_u64(v),
        None => serializer.collect_str(value),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Big(String),
    }
    match Repr::deserialize(deserializer)? {
        Repr::Small(v) => Ok(BigUint::from(v)),
        Repr::Big(s) => s.parse().map_err(serde::de::Error::custom),
    }
}
