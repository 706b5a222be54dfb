use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{SSetError, TruncatedSSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate object {0:?}")]
    DuplicateObject(String),
    #[error("duplicate morphism {0:?}")]
    DuplicateMorphism(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("object {0:?} has no identity")]
    MissingIdentity(String),
    #[error("identity {0:?} is not an endomorphism of its object")]
    IdentityEndpoints(String),
    #[error("{first:?} and {second:?} are not composable")]
    NotComposable { first: String, second: String },
    #[error("conflicting composites for {first:?} then {second:?}")]
    ConflictingComposite { first: String, second: String },
    #[error("no composite given for {first:?} then {second:?}")]
    MissingComposite { first: String, second: String },
    #[error("composite of {first:?} then {second:?} has the wrong endpoints")]
    CompositeEndpoints { first: String, second: String },
    #[error("unit law fails for {0:?}")]
    UnitLaw(String),
    #[error("composition is not associative on {0:?}, {1:?}, {2:?}")]
    Associativity(String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Composite {
    pub first: String,
    pub second: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CategoryRepr {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: BTreeMap<String, String>,
    #[serde(default)]
    composition: Vec<Composite>,
}

/// A finite category. Composites with an identity may be omitted from the
/// composition table; all other composable pairs must be listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CategoryRepr", into = "CategoryRepr")]
pub struct FinCategory {
    repr: CategoryRepr,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    /// `(f, g) -> g ∘ f`.
    compose: HashMap<(usize, usize), usize>,
}

impl From<FinCategory> for CategoryRepr {
    fn from(c: FinCategory) -> Self {
        c.repr
    }
}

impl TryFrom<CategoryRepr> for FinCategory {
    type Error = CategoryError;

    fn try_from(repr: CategoryRepr) -> Result<Self, CategoryError> {
        FinCategory::new(repr.objects, repr.morphisms, repr.identities, repr.composition)
    }
}

fn index_of(names: &[String], dup: fn(String) -> CategoryError) -> Result<HashMap<String, usize>, CategoryError> {
    let mut out = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.clone(), i).is_some() {
            return Err(dup(n.clone()));
        }
    }
    Ok(out)
}

impl FinCategory {
    /// Builds and checks the unit and associativity laws exhaustively.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: BTreeMap<String, String>,
        composition: Vec<Composite>,
    ) -> Result<Self, CategoryError> {
        let obj = index_of(&objects, CategoryError::DuplicateObject)?;
        let names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
        let mor = index_of(&names, CategoryError::DuplicateMorphism)?;
        let find_obj = |s: &String| obj.get(s).copied().ok_or_else(|| CategoryError::UnknownObject(s.clone()));
        let find_mor = |s: &String| mor.get(s).copied().ok_or_else(|| CategoryError::UnknownMorphism(s.clone()));
        let source = morphisms.iter().map(|m| find_obj(&m.source)).collect::<Result<Vec<_>, _>>()?;
        let target = morphisms.iter().map(|m| find_obj(&m.target)).collect::<Result<Vec<_>, _>>()?;
        for key in identities.keys() {
            find_obj(key)?;
        }
        let identity = objects
            .iter()
            .map(|o| {
                let name = identities.get(o).ok_or_else(|| CategoryError::MissingIdentity(o.clone()))?;
                let m = find_mor(name)?;
                let x = obj[o];
                if source[m] != x || target[m] != x {
                    return Err(CategoryError::IdentityEndpoints(name.clone()));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>, _>>()?;

        let pair_names = |f: usize, g: usize| (names[f].clone(), names[g].clone());
        let mut compose = HashMap::new();
        for c in &composition {
            let (f, g, r) = (find_mor(&c.first)?, find_mor(&c.second)?, find_mor(&c.result)?);
            let (first, second) = pair_names(f, g);
            if target[f] != source[g] {
                return Err(CategoryError::NotComposable { first, second });
            }
            if source[r] != source[f] || target[r] != target[g] {
                return Err(CategoryError::CompositeEndpoints { first, second });
            }
            if compose.insert((f, g), r).is_some_and(|old| old != r) {
                return Err(CategoryError::ConflictingComposite { first, second });
            }
        }
        for f in 0..names.len() {
            for (a, b, r) in [(identity[source[f]], f, f), (f, identity[target[f]], f)] {
                match compose.get(&(a, b)) {
                    None => {
                        compose.insert((a, b), r);
                    }
                    Some(&x) if x != r => return Err(CategoryError::UnitLaw(names[f].clone())),
                    Some(_) => {}
                }
            }
        }
        for f in 0..names.len() {
            for g in (0..names.len()).filter(|&g| source[g] == target[f]) {
                if !compose.contains_key(&(f, g)) {
                    let (first, second) = pair_names(f, g);
                    return Err(CategoryError::MissingComposite { first, second });
                }
            }
        }
        for f in 0..names.len() {
            for g in (0..names.len()).filter(|&g| source[g] == target[f]) {
                for h in (0..names.len()).filter(|&h| source[h] == target[g]) {
                    if compose[&(compose[&(f, g)], h)] != compose[&(f, compose[&(g, h)])] {
                        return Err(CategoryError::Associativity(names[f].clone(), names[g].clone(), names[h].clone()));
                    }
                }
            }
        }
        let repr = CategoryRepr { objects, morphisms, identities, composition };
        Ok(Self { repr, source, target, identity, compose })
    }

    /// Builds from a composition function on morphism indices.
    fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identity: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let name = |m: usize| morphisms[m].0.clone();
        let mut composition = Vec::new();
        for f in 0..morphisms.len() {
            for g in (0..morphisms.len()).filter(|&g| morphisms[g].1 == morphisms[f].2) {
                composition.push(Composite { first: name(f), second: name(g), result: name(compose(f, g)) });
            }
        }
        let identities = identity.iter().enumerate().map(|(o, &m)| (objects[o].clone(), name(m))).collect();
        let morphisms = morphisms
            .iter()
            .map(|(n, s, t)| Morphism { name: n.clone(), source: objects[*s].clone(), target: objects[*t].clone() })
            .collect();
        Self::new(objects, morphisms, identities, composition).expect("fixture categories satisfy the axioms")
    }

    /// `0 -> 1` with identities `id0`, `id1` and the arrow `u`.
    pub fn walking_arrow() -> Self {
        Self::linear_order_named(2, |a, b| if a == b { format!("id{a}") } else { "u".into() })
    }

    /// The one-object category of the cyclic group of order `k`, with
    /// elements `e`, `g`, `g2`, ….
    pub fn cyclic_group(k: usize) -> Self {
        assert!(k >= 1, "a group has at least one element");
        let elem = |a: usize| match a {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{a}"),
        };
        let morphisms = (0..k).map(|a| (elem(a), 0, 0)).collect();
        Self::from_fn(vec!["*".into()], morphisms, vec![0], |f, g| (f + g) % k)
    }

    /// The poset `0 < 1 < … < k-1`, with one arrow `a-b` for each `a <= b`.
    pub fn linear_order(k: usize) -> Self {
        Self::linear_order_named(k, |a, b| format!("{a}-{b}"))
    }

    fn linear_order_named(k: usize, name: impl Fn(usize, usize) -> String) -> Self {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).expect("pair listed");
        let morphisms = pairs.iter().map(|&(a, b)| (name(a, b), a, b)).collect();
        let identity = (0..k).map(|a| index(a, a)).collect();
        Self::from_fn((0..k).map(|a| a.to_string()).collect(), morphisms, identity, |f, g| {
            index(pairs[f].0, pairs[g].1)
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.repr.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.source.len()
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.repr.morphisms[m].name
    }

    /// `g ∘ f` when `f` and `g` are composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }
}

impl TruncatedSSet {
    /// The nerve up to dimension `dim`: objects in degree 0 and strings of
    /// `n` composable morphisms in degree `n`, named by joining morphism
    /// names with `|`.
    pub fn nerve(c: &FinCategory, dim: usize) -> Result<Self, SSetError> {
        type Chain = (usize, Vec<usize>);
        let mut levels: Vec<Vec<Chain>> = vec![(0..c.objects().len()).map(|o| (o, Vec::new())).collect()];
        for n in 1..=dim {
            let next = levels[n - 1]
                .iter()
                .flat_map(|(o, ms)| {
                    let end = ms.last().map_or(*o, |&m| c.target[m]);
                    (0..c.morphism_count()).filter(move |&m| c.source[m] == end).map(move |m| {
                        let mut ms = ms.clone();
                        ms.push(m);
                        (*o, ms)
                    })
                })
                .collect();
            levels.push(next);
        }
        let vertex = |(o, ms): &Chain, i: usize| if i == 0 { *o } else { c.target[ms[i - 1]] };
        TruncatedSSet::from_fn(
            dim,
            levels,
            |(o, ms): &Chain| {
                if ms.is_empty() {
                    c.objects()[*o].clone()
                } else {
                    ms.iter().map(|&m| c.morphism_name(m)).collect::<Vec<_>>().join("|")
                }
            },
            |n, i, chain: &Chain| {
                let (o, ms) = chain;
                let mut out = ms.clone();
                if i == 0 {
                    out.remove(0);
                    (vertex(chain, 1), out)
                } else if i == n {
                    out.pop();
                    (*o, out)
                } else {
                    let joined = c.compose(ms[i - 1], ms[i]).expect("composable string");
                    out.splice(i - 1..=i, [joined]);
                    (*o, out)
                }
            },
            |_, i, chain: &Chain| {
                let mut out = chain.1.clone();
                out.insert(i, c.identity[vertex(chain, i)]);
                (chain.0, out)
            },
        )
    }
}
