//! Group specifications on the command line and in files.

use std::fmt;
use std::path::Path;

use crate::constructions::{
    alt, cyclic, dihedral, gl2_3, psl2, psl3_3, quaternion8, sl2_3, sym, sz,
};
use crate::error::{Error, Result};
use crate::field::PrimePower;
use crate::kernel::{Group, Permutation};

/// A named construction or an explicit generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Psl2(u64),
    Psl3_3,
    Sz(u64),
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Sl2_3,
    Gl2_3,
    Explicit(GroupFile),
}

fn number<T: std::str::FromStr>(word: Option<&str>, name: &str) -> Result<T> {
    let w = word.ok_or_else(|| Error::Parse(format!("{name} needs a parameter")))?;
    w.parse()
        .map_err(|_| Error::Parse(format!("bad parameter {w:?} for {name}")))
}

impl GroupSpec {
    /// Parses words such as `psl2 13`, `sym 5` or `file group.grp`.
    pub fn parse(words: &[String]) -> Result<Self> {
        let mut it = words.iter().map(String::as_str);
        let name = it
            .next()
            .ok_or_else(|| Error::Parse("missing group name".into()))?;
        let arg = it.next();
        let spec = match name {
            "psl2" => GroupSpec::Psl2(number(arg, name)?),
            "sz" => GroupSpec::Sz(number(arg, name)?),
            "sym" => GroupSpec::Sym(number(arg, name)?),
            "alt" => GroupSpec::Alt(number(arg, name)?),
            "cyclic" => GroupSpec::Cyclic(number(arg, name)?),
            "dihedral" => GroupSpec::Dihedral(number(arg, name)?),
            "psl3_3" => GroupSpec::Psl3_3,
            "quaternion8" => GroupSpec::Quaternion8,
            "sl2_3" => GroupSpec::Sl2_3,
            "gl2_3" => GroupSpec::Gl2_3,
            "file" => {
                let path = arg.ok_or_else(|| Error::Parse("file needs a path".into()))?;
                GroupSpec::Explicit(GroupFile::read(Path::new(path))?)
            }
            other => return Err(Error::Parse(format!("unknown group {other:?}"))),
        };
        let takes_arg = !matches!(
            spec,
            GroupSpec::Psl3_3 | GroupSpec::Quaternion8 | GroupSpec::Sl2_3 | GroupSpec::Gl2_3
        );
        let extra = if takes_arg { it.next() } else { arg };
        if let Some(w) = extra {
            return Err(Error::Parse(format!("unexpected argument {w:?}")));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Psl2(q) => psl2(PrimePower::new(*q)?),
            GroupSpec::Psl3_3 => psl3_3(),
            GroupSpec::Sz(q) => sz(PrimePower::new(*q)?),
            GroupSpec::Sym(n) => sym(*n),
            GroupSpec::Alt(n) => alt(*n),
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Quaternion8 => quaternion8(),
            GroupSpec::Sl2_3 => sl2_3(),
            GroupSpec::Gl2_3 => gl2_3(),
            GroupSpec::Explicit(f) => f.build(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Psl2(q) => write!(f, "psl2 {q}"),
            GroupSpec::Psl3_3 => f.write_str("psl3_3"),
            GroupSpec::Sz(q) => write!(f, "sz {q}"),
            GroupSpec::Sym(n) => write!(f, "sym {n}"),
            GroupSpec::Alt(n) => write!(f, "alt {n}"),
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::Quaternion8 => f.write_str("quaternion8"),
            GroupSpec::Sl2_3 => f.write_str("sl2_3"),
            GroupSpec::Gl2_3 => f.write_str("gl2_3"),
            GroupSpec::Explicit(g) => write!(f, "degree {} with {} generators", g.degree, g.generators.len()),
        }
    }
}

/// Plain-text group file: a degree line, then one generator per line in
/// 0-based cycle notation. Blank lines and `#` comments are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty group file".into()))?;
        let degree: usize = first
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree line {first:?}")))?;
        let generators = lines
            .map(|l| Permutation::parse_cycles(l, degree))
            .collect::<Result<_>>()?;
        Ok(GroupFile { degree, generators })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_group(g: &Group) -> Self {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Group> {
        Group::from_generators(self.degree, self.generators.clone())
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
