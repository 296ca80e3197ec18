//! Serde adapters that keep exact values exact: rationals as `"p/q"` strings,
//! polynomials as ascending lists of such strings.

pub mod rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod poly {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::poly::Poly;
    use crate::rational::parse_rational;

    pub fn serialize<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
        p.to_strings().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
            .map_err(serde::de::Error::custom)
    }
}
