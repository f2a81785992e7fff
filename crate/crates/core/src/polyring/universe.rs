use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A named block of variables, e.g. the geometric variables `x1..xn` or the
/// coefficients of one input polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarGroup {
    pub name: String,
    pub vars: Vec<usize>,
}

/// Ordered variable names together with a partition of them into groups.
///
/// A universe is fixed once built; polynomials hold it behind an `Arc` and
/// arithmetic between polynomials requires the universes to be equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarUniverse {
    names: Vec<String>,
    groups: Vec<VarGroup>,
    group_of: Vec<usize>,
    index: HashMap<String, usize>,
}

impl VarUniverse {
    /// Builds a universe from an ordered name list and a partition of those
    /// names into groups.
    pub fn new<S: AsRef<str>>(names: &[S], groups: &[(S, Vec<S>)]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate variable `{name}`")));
            }
        }
        let mut group_of = vec![usize::MAX; names.len()];
        let mut out_groups = Vec::with_capacity(groups.len());
        for (gi, (gname, members)) in groups.iter().enumerate() {
            let gname = gname.as_ref().to_string();
            if out_groups.iter().any(|g: &VarGroup| g.name == gname) {
                return Err(Error::InvalidUniverse(format!("duplicate group `{gname}`")));
            }
            let mut vars = Vec::with_capacity(members.len());
            for m in members {
                let m = m.as_ref();
                let v = *index
                    .get(m)
                    .ok_or_else(|| Error::InvalidUniverse(format!("group `{gname}` names unknown variable `{m}`")))?;
                if group_of[v] != usize::MAX {
                    return Err(Error::InvalidUniverse(format!("variable `{m}` belongs to two groups")));
                }
                group_of[v] = gi;
                vars.push(v);
            }
            out_groups.push(VarGroup { name: gname, vars });
        }
        if let Some(v) = group_of.iter().position(|&g| g == usize::MAX) {
            return Err(Error::InvalidUniverse(format!("variable `{}` is in no group", names[v])));
        }
        Ok(Arc::new(VarUniverse { names, groups: out_groups, group_of, index }))
    }

    /// Convenience constructor: groups are listed in order and the variable
    /// order is the concatenation of the groups.
    pub fn from_groups<S: AsRef<str>>(groups: &[(S, Vec<S>)]) -> Result<Arc<Self>> {
        let names: Vec<&str> = groups.iter().flat_map(|(_, vs)| vs.iter().map(|v| v.as_ref())).collect();
        let groups: Vec<(&str, Vec<&str>)> = groups
            .iter()
            .map(|(g, vs)| (g.as_ref(), vs.iter().map(|v| v.as_ref()).collect()))
            .collect();
        Self::new(&names, &groups)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn groups(&self) -> &[VarGroup] {
        &self.groups
    }

    pub fn group(&self, name: &str) -> Option<&VarGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn group_index(&self, name: &str) -> Option<usize> {
        self.groups.iter().position(|g| g.name == name)
    }

    pub fn group_of(&self, var: usize) -> usize {
        self.group_of[var]
    }
}
