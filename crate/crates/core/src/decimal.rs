//! Serde adapters writing exact integers as decimal strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(D::Error::custom)
    }
}

pub mod bigint_map {
    use super::*;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        let as_str: BTreeMap<u32, String> = m.iter().map(|(k, v)| (*k, v.to_string())).collect();
        as_str.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, BigInt>, D::Error> {
        let raw = BTreeMap::<u32, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| Ok((k, BigInt::from_str(&v).map_err(D::Error::custom)?)))
            .collect()
    }
}
