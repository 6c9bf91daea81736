/// Resource caps shared by every construction and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring (or module, or pair table) any constructor will build.
    pub size: usize,
    /// Largest subset size swept by the finite annihilator condition.
    pub fac_cap: usize,
    /// Default degree bound for polynomial searches.
    pub degree: usize,
    /// Hard cap on polynomial degree.
    pub degree_max: usize,
}

impl Limits {
    pub const DEFAULT_SIZE: usize = 256;

    /// Defaults, with the size cap overridden by `RINGLAB_SIZE_LIMIT` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(size) = std::env::var("RINGLAB_SIZE_LIMIT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.size = size;
        }
        limits
    }

    pub(crate) fn check_size(&self, requested: usize) -> crate::Result<()> {
        if requested > self.size {
            return Err(crate::Error::SizeLimit {
                requested,
                limit: self.size,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            size: Self::DEFAULT_SIZE,
            fac_cap: 3,
            degree: 3,
            degree_max: 8,
        }
    }
}
