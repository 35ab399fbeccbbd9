//! Built-in permutation groups, looked up by name.

use pcomplex::permcore::Group;

use crate::error::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLibraryEntry {
    pub name: String,
    pub degree: usize,
    /// Generators in cycle notation, one string per generator.
    pub generators: Vec<String>,
    /// The documented order; [`GroupLibraryEntry::group`] checks it.
    pub order: u64,
    pub note: String,
}

impl GroupLibraryEntry {
    pub fn generator_text(&self) -> String {
        self.generators.join(";")
    }

    /// Builds the group and confirms its order.
    pub fn group(&self) -> Result<Group, HarnessError> {
        let g = Group::parse(self.degree, &self.generator_text())?;
        if g.size() != self.order {
            return Err(HarnessError::Lookup(format!(
                "{} generates a group of order {}, expected {}",
                self.name,
                g.size(),
                self.order
            )));
        }
        Ok(g)
    }
}

/// Sporadic and other groups well beyond the enumeration caps.
const OUT_OF_SCOPE: [&str; 22] = [
    "fi22", "fi23", "fi24", "co1", "co2", "co3", "hn", "he", "hs", "j1", "j2", "j3", "j4", "ly", "mcl", "m22", "m23",
    "m24", "on", "ru", "suz", "th",
];

pub const NAMES: &str = "sym(n) and alt(n) for n ≤ 8, dihedral(n) for 3 ≤ n ≤ 64, gl32, m11, m12";

fn cycle(points: impl IntoIterator<Item = usize>) -> String {
    let p: Vec<String> = points.into_iter().map(|i| i.to_string()).collect();
    format!("({})", p.join(","))
}

/// `sym5`, `sym(5)` and `S5` all name the same entry.
fn parse_family(name: &str) -> Option<(&'static str, usize)> {
    for (prefix, family) in [
        ("sym", "sym"),
        ("alt", "alt"),
        ("dihedral", "dihedral"),
        ("s", "sym"),
        ("a", "alt"),
        ("d", "dihedral"),
    ] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            if let Ok(n) = rest.parse::<usize>() {
                return Some((family, n));
            }
        }
    }
    None
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn lookup(name: &str) -> Result<GroupLibraryEntry, HarnessError> {
    let key = name.trim().to_ascii_lowercase();
    if OUT_OF_SCOPE.contains(&key.as_str()) {
        return Err(HarnessError::OutOfScope(format!(
            "{name} is outside the desk-scale caps; available groups: {NAMES}"
        )));
    }
    let entry = |canonical: String, degree: usize, generators: Vec<String>, order: u64, note: &str| GroupLibraryEntry {
        name: canonical,
        degree,
        generators,
        order,
        note: note.to_string(),
    };
    match key.as_str() {
        "gl32" | "psl27" | "gl(3,2)" | "l3(2)" => {
            return Ok(entry(
                "gl32".into(),
                7,
                vec!["(1,2,3,4,5,6,7)".into(), "(3,5)(6,7)".into()],
                168,
                "GL(3,2) ≅ PSL(2,7) on the 7 points of the Fano plane",
            ));
        }
        "m11" => {
            return Ok(entry(
                "m11".into(),
                11,
                vec!["(1,2,3,4,5,6,7,8,9,10,11)".into(), "(3,7,11,8)(4,10,5,6)".into()],
                7920,
                "Mathieu group M11, sharply 4-transitive on 11 points",
            ));
        }
        "m12" => {
            return Ok(entry(
                "m12".into(),
                12,
                vec![
                    "(1,2,3,4,5,6,7,8,9,10,11)".into(),
                    "(3,7,11,8)(4,10,5,6)".into(),
                    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)".into(),
                ],
                95040,
                "Mathieu group M12, sharply 5-transitive on 12 points",
            ));
        }
        _ => {}
    }
    let unknown = || HarnessError::Lookup(format!("unknown group `{name}`; available groups: {NAMES}"));
    let (family, n) = parse_family(&key).ok_or_else(unknown)?;
    match family {
        "sym" if (2..=8).contains(&n) => Ok(entry(
            format!("sym{n}"),
            n,
            vec!["(1,2)".into(), cycle(1..=n)],
            factorial(n),
            "symmetric group",
        )),
        "alt" if (3..=8).contains(&n) => {
            let long = if n % 2 == 1 { cycle(1..=n) } else { cycle(2..=n) };
            let mut generators = vec!["(1,2,3)".to_string()];
            if n > 3 {
                generators.push(long);
            }
            Ok(entry(
                format!("alt{n}"),
                n,
                generators,
                factorial(n) / 2,
                "alternating group",
            ))
        }
        "dihedral" if (3..=64).contains(&n) => {
            let flip: String = (1..=n / 2).map(|i| cycle([i, n + 1 - i])).collect();
            Ok(entry(
                format!("dihedral{n}"),
                n,
                vec![cycle(1..=n), flip],
                2 * n as u64,
                "symmetries of a regular n-gon",
            ))
        }
        _ => Err(unknown()),
    }
}

pub fn load(name: &str) -> Result<(GroupLibraryEntry, Group), HarnessError> {
    let e = lookup(name)?;
    let g = e.group()?;
    Ok((e, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_orders() {
        for name in [
            "sym2",
            "sym5",
            "sym(8)",
            "alt3",
            "alt4",
            "alt(5)",
            "alt8",
            "dihedral4",
            "d7",
            "gl32",
            "m11",
        ] {
            let e = lookup(name).unwrap();
            assert_eq!(e.group().unwrap().size(), e.order, "{name}");
        }
        assert_eq!(lookup("S5").unwrap().order, 120);
        assert_eq!(lookup("gl32").unwrap().degree, 7);
    }

    #[test]
    fn m12_order() {
        let e = lookup("m12").unwrap();
        assert_eq!(e.group().unwrap().size(), 95040);
    }

    #[test]
    fn refusals() {
        assert!(matches!(lookup("Fi22"), Err(HarnessError::OutOfScope(_))));
        assert!(matches!(lookup("sym9"), Err(HarnessError::Lookup(_))));
        assert!(matches!(lookup("banana"), Err(HarnessError::Lookup(_))));
    }
}
