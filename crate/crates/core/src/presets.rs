//! Named quivers with frozen orientations.
//!
//! | name            | vertices | arrows                                                        |
//! |-----------------|----------|---------------------------------------------------------------|
//! | `A:n`           | n        | `i → i+1`                                                     |
//! | `D:n`           | n        | `0 → 2`, `1 → 2`, `i → i+1` for `2 ≤ i ≤ n-2`                 |
//! | `E:6/7/8`       | 6/7/8    | chain `1 - … - (n-1)` around centre `3`, arrows toward the centre, `0 → 3` |
//! | `Atilde:a,b`    | a+b      | `0 → 1 → … → a` and `0 → a+b-1 → … → a`                       |
//! | `Dtilde:n`      | n+1      | `0 → 2`, `1 → 2`, `k+1 → k` for `2 ≤ k ≤ n-3`, `n-1 → n-2`, `n → n-2` |
//! | `Etilde:6`      | 7        | chain `1 - 2 - 3 - 4 - 5`, arm `3 - 0 - 6`, arrows toward `3` |
//! | `Etilde:7`      | 8        | chain `1 - … - 7` around centre `4`, arm `0 - 4`, arrows toward `4` |
//! | `Etilde:8`      | 9        | same as `Etilde8-paper`                                       |
//! | `Dtilde4-paper` | 5        | `0 → 2`, `1 → 2`, `2 → 3`, `2 → 4`                             |
//! | `Etilde8-paper` | 9        | `3 → 0`, `2 → 1`, `2 → 3`, `3 → 4`, `5 → 4`, `5 → 6`, `7 → 6`, `7 → 8` |

use crate::error::{Error, Result};
use crate::quiver::Quiver;

pub fn preset(name: &str) -> Result<Quiver> {
    let bad = || Error::BadPreset(name.to_string());
    let (family, arg) = match name {
        "Dtilde4-paper" => {
            return Quiver::new(5, vec![(0, 2), (1, 2), (2, 3), (2, 4)]).map(|q| q.named(name))
        }
        "Etilde8-paper" => return etilde8().map(|q| q.named(name)),
        _ => name.split_once(':').ok_or_else(bad)?,
    };
    let int = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let arrows = match family {
        "A" => {
            let n = int(arg)?;
            if n == 0 {
                return Err(bad());
            }
            return Quiver::new(n, (0..n - 1).map(|i| (i, i + 1)).collect()).map(|q| q.named(name));
        }
        "D" => {
            let n = int(arg)?;
            if n < 4 {
                return Err(bad());
            }
            let mut arrows = vec![(0, 2), (1, 2)];
            arrows.extend((2..n - 1).map(|i| (i, i + 1)));
            (n, arrows)
        }
        "E" => match int(arg)? {
            n @ 6..=8 => {
                let mut arrows = vec![(0, 3), (1, 2), (2, 3)];
                arrows.extend((4..n).map(|i| (i, i - 1)));
                (n, arrows)
            }
            _ => return Err(bad()),
        },
        "Atilde" => {
            let (a, b) = arg.split_once(',').ok_or_else(bad)?;
            let (a, b) = (int(a)?, int(b)?);
            if a == 0 || b == 0 {
                return Err(bad());
            }
            let m = a + b;
            let mut arrows: Vec<(usize, usize)> = (0..a).map(|i| (i, i + 1)).collect();
            // The other way round: 0 → m-1 → m-2 → … → a.
            let mut path = vec![0];
            path.extend((a..m).rev());
            arrows.extend(path.windows(2).map(|w| (w[0], w[1])));
            (m, arrows)
        }
        "Dtilde" => {
            let n = int(arg)?;
            if n < 4 {
                return Err(bad());
            }
            let mut arrows = vec![(0, 2), (1, 2)];
            arrows.extend((2..n - 2).map(|k| (k + 1, k)));
            arrows.push((n - 1, n - 2));
            arrows.push((n, n - 2));
            (n + 1, arrows)
        }
        "Etilde" => match int(arg)? {
            6 => (7, vec![(1, 2), (2, 3), (4, 3), (5, 4), (0, 3), (6, 0)]),
            7 => (
                8,
                vec![(1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 6), (0, 4)],
            ),
            8 => return etilde8().map(|q| q.named(name)),
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    };
    Quiver::new(arrows.0, arrows.1).map(|q| q.named(name))
}

fn etilde8() -> Result<Quiver> {
    Quiver::new(
        9,
        vec![
            (3, 0),
            (2, 1),
            (2, 3),
            (3, 4),
            (5, 4),
            (5, 6),
            (7, 6),
            (7, 8),
        ],
    )
}

/// Names used by the duality and regression sweeps: every Dynkin and extended
/// Dynkin preset up to `D̃_6` and `Ẽ_6`.
pub fn small_presets() -> Vec<&'static str> {
    vec![
        "A:1",
        "A:2",
        "A:3",
        "A:4",
        "A:5",
        "D:4",
        "D:5",
        "D:6",
        "E:6",
        "Atilde:1,1",
        "Atilde:2,1",
        "Atilde:2,2",
        "Atilde:3,1",
        "Dtilde:4",
        "Dtilde4-paper",
        "Dtilde:5",
        "Dtilde:6",
        "Etilde:6",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::QuiverClass;

    #[test]
    fn presets_classify() {
        let cases = [
            ("A:1", QuiverClass::A(1)),
            ("A:5", QuiverClass::A(5)),
            ("D:4", QuiverClass::D(4)),
            ("D:7", QuiverClass::D(7)),
            ("E:6", QuiverClass::E(6)),
            ("E:7", QuiverClass::E(7)),
            ("E:8", QuiverClass::E(8)),
            ("Atilde:1,1", QuiverClass::ATilde { a: 1, b: 1 }),
            ("Atilde:2,1", QuiverClass::ATilde { a: 2, b: 1 }),
            ("Atilde:1,2", QuiverClass::ATilde { a: 2, b: 1 }),
            ("Atilde:2,2", QuiverClass::ATilde { a: 2, b: 2 }),
            ("Dtilde:4", QuiverClass::DTilde(4)),
            ("Dtilde:5", QuiverClass::DTilde(5)),
            ("Dtilde:8", QuiverClass::DTilde(8)),
            ("Etilde:6", QuiverClass::ETilde(6)),
            ("Etilde:7", QuiverClass::ETilde(7)),
            ("Etilde:8", QuiverClass::ETilde(8)),
            ("Dtilde4-paper", QuiverClass::DTilde(4)),
            ("Etilde8-paper", QuiverClass::ETilde(8)),
        ];
        for (name, class) in cases {
            let q = preset(name).unwrap();
            assert_eq!(q.classify().unwrap(), class, "{name}");
            assert_eq!(q.vertex_count(), class.vertex_count(), "{name}");
            assert_eq!(q.name(), Some(name));
        }
    }

    #[test]
    fn dtilde_matches_documented_orientation() {
        assert_eq!(
            preset("Dtilde:4").unwrap().arrows(),
            &[(0, 2), (1, 2), (3, 2), (4, 2)]
        );
        assert_eq!(
            preset("Dtilde:6").unwrap().arrows(),
            &[(0, 2), (1, 2), (3, 2), (4, 3), (5, 4), (6, 4)]
        );
        assert_eq!(preset("Atilde:1,1").unwrap().arrows(), &[(0, 1), (0, 1)]);
        assert_eq!(
            preset("Atilde:2,2").unwrap().arrows(),
            &[(0, 1), (1, 2), (0, 3), (3, 2)]
        );
    }

    #[test]
    fn bad_names() {
        for name in [
            "",
            "A",
            "A:0",
            "D:3",
            "E:9",
            "Atilde:0,2",
            "Dtilde:3",
            "Etilde:5",
            "X:3",
        ] {
            assert!(matches!(preset(name), Err(Error::BadPreset(_))), "{name}");
        }
    }
}
