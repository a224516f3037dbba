//! Named algebras and representations available from the command line.

use std::sync::Arc;

use crate::cli::format::AlgebraFile;
use crate::constructors::{
    heisenberg, oscillator, special_linear, special_linear_natural, special_linear_super, symplectic,
    symplectic_natural, takiff, trivial_central_extension,
};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::rep::{adjoint, sl2_irrep_on, trivial_rep, Representation};

/// Builtin names; `:n` marks a size parameter.
pub const BUILTINS: &[&str] =
    &["sl2", "sl3", "sp4", "heisenberg:n", "takiff:sl2", "reductive-sl2", "oscillator:n", "sl21", "abelian:n"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    SpecialLinear(usize),
    Symplectic(usize),
    Other,
}

/// An algebra with the representations that can be requested by name.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub algebra: Arc<LieAlgebra>,
    /// Representations read from a file, in file order.
    pub file_reps: Vec<(String, Representation)>,
    family: Family,
}

fn size_param(name: &str, prefix: &str) -> Option<Result<usize>> {
    let rest = name.strip_prefix(prefix)?.strip_prefix(':')?;
    Some(match rest.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(Error::InvalidArgument(format!("{prefix} needs a positive size, got {rest:?}"))),
    })
}

impl Instance {
    pub fn builtin(name: &str) -> Result<Self> {
        let (algebra, family) = match name {
            "sl2" => (special_linear(2)?, Family::SpecialLinear(2)),
            "sl3" => (special_linear(3)?, Family::SpecialLinear(3)),
            "sp4" => (symplectic(4)?, Family::Symplectic(4)),
            "takiff:sl2" => (takiff(&special_linear(2)?)?, Family::Other),
            "reductive-sl2" => (trivial_central_extension(&special_linear(2)?), Family::Other),
            "sl21" => (special_linear_super(2, 1)?, Family::Other),
            _ => {
                let algebra = if let Some(n) = size_param(name, "heisenberg") {
                    heisenberg(n?)?
                } else if let Some(n) = size_param(name, "oscillator") {
                    oscillator(n?)?
                } else if let Some(n) = size_param(name, "abelian") {
                    LieAlgebra::abelian(n?)
                } else {
                    return Err(Error::Unknown { kind: "builtin", name: name.into() });
                };
                (algebra, Family::Other)
            }
        };
        Ok(Instance { name: name.into(), algebra: Arc::new(algebra), file_reps: Vec::new(), family })
    }

    pub fn from_file(file: AlgebraFile) -> Self {
        Instance { name: file.name, algebra: file.algebra, file_reps: file.representations, family: Family::Other }
    }

    /// Resolves `adjoint`, `trivial[:d]`, `natural` (sl_n, sp_2n), `irrep:m`
    /// (sl_2) or the name of a representation read from a file.
    pub fn rep(&self, name: &str) -> Result<Representation> {
        if let Some((_, r)) = self.file_reps.iter().find(|(n, _)| n == name) {
            return Ok(r.clone());
        }
        let g = &self.algebra;
        match (name, self.family) {
            ("adjoint", _) => return Ok(adjoint(g)),
            ("trivial", _) => return Ok(trivial_rep(g, 1)),
            ("natural", Family::SpecialLinear(n)) => return special_linear_natural(g, n),
            ("natural", Family::Symplectic(n)) => return symplectic_natural(g, n),
            _ => {}
        }
        if let Some(d) = size_param(name, "trivial") {
            return Ok(trivial_rep(g, d?));
        }
        if let Some(rest) = name.strip_prefix("irrep:") {
            if self.family == Family::SpecialLinear(2) {
                let m = rest
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("irrep needs a highest weight, got {rest:?}")))?;
                return Ok(sl2_irrep_on(g, m));
            }
        }
        Err(Error::Unknown { kind: "representation", name: name.into() })
    }
}
