//! Group spec files.
//!
//! ```toml
//! name = "symmetric(4)"
//! degree = 4
//! generators = ["(1 2)", "(1 2 3 4)"]
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    #[serde(default)]
    pub generators: Vec<String>,
}

impl GroupSpec {
    pub fn from_toml(text: &str) -> Result<GroupSpec> {
        let spec: GroupSpec = toml::from_str(text).map_err(|e| Error::Spec(e.to_string()))?;
        if spec.degree == 0 {
            return Err(Error::Spec("degree must be positive".into()));
        }
        Ok(spec)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("group spec serializes")
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect()
    }

    pub fn build(&self, cap: usize) -> Result<PermutationGroup> {
        PermutationGroup::generate(self.degree, &self.permutations()?, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let spec = GroupSpec {
            name: Some("s4".into()),
            degree: 4,
            generators: vec!["(1 2)".into(), "(1 2 3 4)".into()],
        };
        let text = spec.to_toml();
        assert_eq!(GroupSpec::from_toml(&text).unwrap(), spec);
        assert_eq!(spec.build(100).unwrap().order(), 24);
    }

    #[test]
    fn name_optional() {
        let spec = GroupSpec::from_toml("degree = 3\ngenerators = [\"(1 2 3)\"]\n").unwrap();
        assert_eq!(spec.name, None);
        assert!(!spec.to_toml().contains("name"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(GroupSpec::from_toml("degree = \"x\""), Err(Error::Spec(_))));
        assert!(matches!(GroupSpec::from_toml("degree = 0"), Err(Error::Spec(_))));
        assert!(matches!(GroupSpec::from_toml("degree = 3\nfoo = 1"), Err(Error::Spec(_))));
        let spec = GroupSpec::from_toml("degree = 3\ngenerators = [\"(1 4)\"]").unwrap();
        assert!(matches!(spec.build(10), Err(Error::PointOutOfRange { .. })));
    }
}
