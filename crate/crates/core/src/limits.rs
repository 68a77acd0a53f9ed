//! Work budgets for enumeration-heavy operations.

/// Deterministic resource budgets. Operations that would exceed a budget
/// fail with `Oversize`/`Exceeded` instead of running unbounded.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Element-enumeration budget for orbit-walking operations.
    pub max_points: u64,
    /// Coset budget for Todd-Coxeter enumeration.
    pub max_cosets: u64,
    /// nu(G) construction is refused when |G|^3 exceeds this many element
    /// triples, unless explicitly overridden.
    pub triple_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: 2_000_000,
            max_cosets: 4_000_000,
            triple_budget: 1 << 20,
        }
    }
}

impl Limits {
    /// Default limits with the `NUCHI_MAX_POINTS` environment override
    /// applied to the element-enumeration budget.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Ok(v) = std::env::var("NUCHI_MAX_POINTS") {
            if let Ok(n) = v.trim().parse::<u64>() {
                l.max_points = n;
            }
        }
        l
    }

    /// Budgets for the full (slow-tier) profile: larger tables for the
    /// p = 5 constructions.
    pub fn full_profile(mut self) -> Self {
        self.max_points = self.max_points.max(4_000_000);
        self.max_cosets = self.max_cosets.max(4_000_000);
        self.triple_budget = self.triple_budget.max(1 << 24);
        self
    }
}
