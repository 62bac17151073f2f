//! Exact arithmetic for ℚ, ℚ(√d), GF(p) and GF(p^k), and validated tuples
//! of pairwise non-embeddable fields.

mod arith;
mod descriptor;
mod element;
mod nfield;
mod parse;

pub use descriptor::{Field, FieldDescriptor, DEFAULT_MAX_FIELD_SIZE};
pub use element::FieldElement;
pub use nfield::{
    classify_characteristic, classify_primeness, embeds, proper_subfields, validate_nfield,
    CharacteristicClass, CharacteristicReport, NField, NScalar, PrimenessClass, PrimenessReport,
};
pub use parse::{parse_element, parse_field, parse_field_capped};

pub(crate) use parse::{split_monomial, split_signed_terms};

/// One representative of each supported field kind, used by tests and
/// random corpora.
pub fn sample_fields() -> Vec<Field> {
    vec![
        Field::rational(),
        Field::quad_ext(2).unwrap(),
        Field::prime(5).unwrap(),
        Field::ext(2, vec![1, 1, 1]).unwrap(),
    ]
}
