//! Named algebras shipped with the crate.

use crate::algebra::{projective_space, projective_space_named, tensor_product, GradedAlgebra};
use crate::error::{Error, Result};
use crate::synthetic;

pub struct BuiltinInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo { name: "cp1", description: "CP^1, omega = h" },
    BuiltinInfo { name: "cp2", description: "CP^2, omega = h" },
    BuiltinInfo { name: "cp3", description: "CP^3, omega = h" },
    BuiltinInfo { name: "cp1xcp1xcp1", description: "CP^1 x CP^1 x CP^1, omega = a + b + c" },
    BuiltinInfo { name: "cp1xcp2", description: "CP^1 x CP^2, omega = a + h" },
    BuiltinInfo {
        name: "synthetic-oddker",
        description: "b3 = 2, cubic form a^3, omega = a; dim ker(omega: H^2 -> H^4) = 1",
    },
    BuiltinInfo {
        name: "synthetic-cupsq",
        description: "cubic form a^3 + 3bc^2, omega = a; Q^2 x Q^2 -> Q^4 nonzero",
    },
    BuiltinInfo {
        name: "synthetic-h3",
        description: "(CP^1)^3 ring plus a symplectic H^3 of rank 2, omega = a + b + c",
    },
    BuiltinInfo {
        name: "synthetic-indefinite",
        description: "cubic form x^3 + 3xy^2 - 3xz^2, omega = x; indefinite form on P",
    },
];

/// The named algebra, with its default distinguished class attached.
pub fn builtin(name: &str) -> Result<GradedAlgebra> {
    match name {
        "cp1" => projective_space(1),
        "cp2" => projective_space(2),
        "cp3" => projective_space(3),
        "cp1xcp1xcp1" => {
            let f = |g| projective_space_named(1, g);
            tensor_product(&tensor_product(&f("a")?, &f("b")?)?, &f("c")?)
        }
        "cp1xcp2" => tensor_product(&projective_space_named(1, "a")?, &projective_space(2)?),
        "synthetic-oddker" => Ok(synthetic::odd_kernel()),
        "synthetic-cupsq" => Ok(synthetic::cup_square()),
        "synthetic-h3" => Ok(synthetic::product_with_h3()),
        "synthetic-indefinite" => Ok(synthetic::indefinite()),
        other => Err(Error::InvalidArgument(format!("unknown builtin {other:?}"))),
    }
}
