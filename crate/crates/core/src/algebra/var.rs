use std::fmt;
use std::sync::Arc;

/// A polynomial variable.
///
/// Variables are totally ordered by kind (arrow, `q`, aggregate `t`,
/// x-variables, u-variables) and then by their name components. String
/// components compare lexicographically and index components numerically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarId {
    /// Arrow variable `t_b`; the name is the arrow id.
    Arrow(Arc<str>),
    /// The opposite-arrow parameter of the doubled quiver.
    Q,
    /// A single aggregate parameter.
    T,
    /// `x_index^(vertex)`, printed `x(vertex)_index`.
    X { vertex: Arc<str>, index: u32 },
    /// `u(slot)_index`, the auxiliary variable of a current, printed `u(slot)_index`.
    U { slot: u32, index: u32 },
}

impl VarId {
    pub fn arrow(name: &str) -> Self {
        VarId::Arrow(Arc::from(name))
    }

    pub fn x(vertex: &str, index: u32) -> Self {
        VarId::X { vertex: Arc::from(vertex), index }
    }

    pub fn u(slot: u32, index: u32) -> Self {
        VarId::U { slot, index }
    }

    pub fn is_arrow_like(&self) -> bool {
        matches!(self, VarId::Arrow(_) | VarId::Q | VarId::T)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Arrow(name) => f.write_str(name),
            VarId::Q => f.write_str("q"),
            VarId::T => f.write_str("t"),
            VarId::X { vertex, index } => write!(f, "x({vertex})_{index}"),
            VarId::U { slot, index } => write!(f, "u({slot})_{index}"),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether `name` can serve as an arrow id: an identifier that is neither
/// `q` nor `t`.
pub fn valid_arrow_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    (first.is_ascii_alphabetic() || first == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "q"
        && name != "t"
}
