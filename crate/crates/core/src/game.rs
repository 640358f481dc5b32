//! Weighted two-player affine congestion games and their exact cost
//! evaluation, including construction from network routing descriptions.

use crate::exactmath::{format_rational, Rational};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{Signed, Zero};

/// How resource latencies translate into player costs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CostModel {
    /// Every user of a resource pays the full latency `alpha + beta * load`.
    Uniform,
    /// Every user pays its own weight times the per-unit cost.
    Proportional,
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostModel::Uniform => write!(f, "uniform"),
            CostModel::Proportional => write!(f, "proportional"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }
}

/// A resource with affine cost `alpha + beta * load`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resource {
    pub id: String,
    pub alpha: Rational,
    pub beta: Rational,
}

/// A pure outcome: one action index per player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ActionProfile {
    pub a1: usize,
    pub a2: usize,
}

impl ActionProfile {
    pub fn new(a1: usize, a2: usize) -> Self {
        ActionProfile { a1, a2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    NegativeCoefficient { resource: String },
    DuplicateResourceId { resource: String },
    UnknownResource { player: u8, resource: String },
    EmptyActionList { player: u8 },
    InvalidWeights,
    ProfileOutOfRange,
    NoPath { player: u8 },
    UnknownNode { node: String },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::NegativeCoefficient { resource } => {
                write!(f, "resource {resource:?} has a negative cost coefficient")
            }
            GameError::DuplicateResourceId { resource } => {
                write!(f, "resource id {resource:?} appears twice")
            }
            GameError::UnknownResource { player, resource } => {
                write!(f, "player {player} action references unknown resource {resource:?}")
            }
            GameError::EmptyActionList { player } => {
                write!(f, "player {player} has no actions")
            }
            GameError::InvalidWeights => {
                write!(f, "weights must satisfy w1 >= 0, w2 >= 0, w1 + w2 > 0")
            }
            GameError::ProfileOutOfRange => write!(f, "action profile index out of range"),
            GameError::NoPath { player } => {
                write!(f, "no directed path from player {player}'s source to its sink")
            }
            GameError::UnknownNode { node } => write!(f, "arc references unknown node {node:?}"),
        }
    }
}

impl core::error::Error for GameError {}

/// A weighted two-player affine congestion game.
///
/// Actions are stored as sets of indices into `resources`. Duplicate actions
/// are removed on construction (they cannot change equilibria or optima); the
/// number removed is kept so front ends can warn about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameInstance {
    resources: Vec<Resource>,
    actions1: Vec<BTreeSet<usize>>,
    actions2: Vec<BTreeSet<usize>>,
    w1: Rational,
    w2: Rational,
    cost_model: CostModel,
    deduplicated: usize,
}

impl GameInstance {
    pub fn new(
        resources: Vec<Resource>,
        actions1: Vec<Vec<String>>,
        actions2: Vec<Vec<String>>,
        w1: Rational,
        w2: Rational,
        cost_model: CostModel,
    ) -> Result<Self, GameError> {
        if w1.is_negative() || w2.is_negative() || (&w1 + &w2).is_zero() {
            return Err(GameError::InvalidWeights);
        }
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, r) in resources.iter().enumerate() {
            if r.alpha.is_negative() || r.beta.is_negative() {
                return Err(GameError::NegativeCoefficient { resource: r.id.clone() });
            }
            if index.insert(r.id.as_str(), i).is_some() {
                return Err(GameError::DuplicateResourceId { resource: r.id.clone() });
            }
        }
        let mut deduplicated = 0;
        let mut resolve = |player: u8, actions: &[Vec<String>]| {
            if actions.is_empty() {
                return Err(GameError::EmptyActionList { player });
            }
            let mut out: Vec<BTreeSet<usize>> = Vec::with_capacity(actions.len());
            for action in actions {
                let mut set = BTreeSet::new();
                for id in action {
                    let &i = index.get(id.as_str()).ok_or_else(|| GameError::UnknownResource {
                        player,
                        resource: id.clone(),
                    })?;
                    set.insert(i);
                }
                if out.contains(&set) {
                    deduplicated += 1;
                } else {
                    out.push(set);
                }
            }
            Ok(out)
        };
        let actions1 = resolve(1, &actions1)?;
        let actions2 = resolve(2, &actions2)?;
        Ok(GameInstance { resources, actions1, actions2, w1, w2, cost_model, deduplicated })
    }

    pub fn resources(&self) -> &[Resource] {
        &self.resources
    }

    pub fn weight(&self, player: Player) -> &Rational {
        match player {
            Player::One => &self.w1,
            Player::Two => &self.w2,
        }
    }

    pub fn cost_model(&self) -> CostModel {
        self.cost_model
    }

    pub fn action_count(&self, player: Player) -> usize {
        match player {
            Player::One => self.actions1.len(),
            Player::Two => self.actions2.len(),
        }
    }

    pub fn action(&self, player: Player, index: usize) -> &BTreeSet<usize> {
        match player {
            Player::One => &self.actions1[index],
            Player::Two => &self.actions2[index],
        }
    }

    /// Resource-id sets of a player's actions, in action order.
    pub fn action_ids(&self, player: Player) -> Vec<Vec<String>> {
        let actions = match player {
            Player::One => &self.actions1,
            Player::Two => &self.actions2,
        };
        actions
            .iter()
            .map(|set| set.iter().map(|&i| self.resources[i].id.clone()).collect())
            .collect()
    }

    /// Number of duplicate actions dropped on construction.
    pub fn deduplicated_actions(&self) -> usize {
        self.deduplicated
    }

    /// Both players have the same action sets.
    pub fn is_symmetric(&self) -> bool {
        let set1: BTreeSet<&BTreeSet<usize>> = self.actions1.iter().collect();
        let set2: BTreeSet<&BTreeSet<usize>> = self.actions2.iter().collect();
        set1 == set2
    }

    pub fn profiles(&self) -> impl Iterator<Item = ActionProfile> + '_ {
        (0..self.actions1.len()).flat_map(move |a1| {
            (0..self.actions2.len()).map(move |a2| ActionProfile::new(a1, a2))
        })
    }

    fn check_profile(&self, p: ActionProfile) -> Result<(), GameError> {
        if p.a1 < self.actions1.len() && p.a2 < self.actions2.len() {
            Ok(())
        } else {
            Err(GameError::ProfileOutOfRange)
        }
    }

    /// Load of every resource under `p`: `w1*[r in A1] + w2*[r in A2]`.
    pub fn load_vector(&self, p: ActionProfile) -> Result<Vec<Rational>, GameError> {
        self.check_profile(p)?;
        let mut loads = alloc::vec![Rational::zero(); self.resources.len()];
        for &r in &self.actions1[p.a1] {
            loads[r] += &self.w1;
        }
        for &r in &self.actions2[p.a2] {
            loads[r] += &self.w2;
        }
        Ok(loads)
    }

    /// Exact cost of one player under the instance's cost model.
    pub fn player_cost(&self, p: ActionProfile, player: Player) -> Result<Rational, GameError> {
        self.check_profile(p)?;
        let loads = self.load_vector(p)?;
        let action = self.action(player, match player {
            Player::One => p.a1,
            Player::Two => p.a2,
        });
        let mut total = Rational::zero();
        for &r in action {
            let res = &self.resources[r];
            total += &res.alpha + &res.beta * &loads[r];
        }
        Ok(match self.cost_model {
            CostModel::Uniform => total,
            CostModel::Proportional => total * self.weight(player),
        })
    }

    /// Total cost of both players.
    pub fn social_cost(&self, p: ActionProfile) -> Result<Rational, GameError> {
        Ok(self.player_cost(p, Player::One)? + self.player_cost(p, Player::Two)?)
    }
}

impl fmt::Display for GameInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} game, w1 = {}, w2 = {}",
            self.cost_model,
            format_rational(&self.w1),
            format_rational(&self.w2)
        )?;
        for r in &self.resources {
            writeln!(
                f,
                "  resource {}: alpha = {}, beta = {}",
                r.id,
                format_rational(&r.alpha),
                format_rational(&r.beta)
            )?;
        }
        for (player, actions) in [("1", &self.actions1), ("2", &self.actions2)] {
            for (i, a) in actions.iter().enumerate() {
                let names: Vec<&str> = a.iter().map(|&r| self.resources[r].id.as_str()).collect();
                writeln!(f, "  player {player} action {i}: {{{}}}", names.join(", "))?;
            }
        }
        Ok(())
    }
}

/// A directed arc with an affine cost on its load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: String,
    pub from: String,
    pub to: String,
    pub alpha: Rational,
    pub beta: Rational,
}

/// A two-commodity network routing description. Player `i` routes its weight
/// from `source_i` to `sink_i`; its actions are the simple directed paths.
#[derive(Debug, Clone)]
pub struct NetworkSpec {
    pub nodes: Vec<String>,
    pub arcs: Vec<Arc>,
    pub source1: String,
    pub sink1: String,
    pub source2: String,
    pub sink2: String,
    pub w1: Rational,
    pub w2: Rational,
    pub cost_model: CostModel,
}

/// Builds the routing game: each player's action list is the set of simple
/// directed source-sink paths, enumerated by depth-first search in input arc
/// order (deterministic). Arcs become the game's resources.
pub fn from_network(spec: &NetworkSpec) -> Result<GameInstance, GameError> {
    let node_ok = |n: &String| spec.nodes.iter().any(|m| m == n);
    for arc in &spec.arcs {
        for n in [&arc.from, &arc.to] {
            if !node_ok(n) {
                return Err(GameError::UnknownNode { node: n.clone() });
            }
        }
    }
    let paths1 = simple_paths(&spec.arcs, &spec.source1, &spec.sink1);
    if paths1.is_empty() {
        return Err(GameError::NoPath { player: 1 });
    }
    let paths2 = simple_paths(&spec.arcs, &spec.source2, &spec.sink2);
    if paths2.is_empty() {
        return Err(GameError::NoPath { player: 2 });
    }
    let resources = spec
        .arcs
        .iter()
        .map(|a| Resource { id: a.id.clone(), alpha: a.alpha.clone(), beta: a.beta.clone() })
        .collect();
    GameInstance::new(
        resources,
        paths1,
        paths2,
        spec.w1.clone(),
        spec.w2.clone(),
        spec.cost_model,
    )
}

/// All simple directed `source -> sink` paths as arc-id lists, DFS order.
fn simple_paths(arcs: &[Arc], source: &str, sink: &str) -> Vec<Vec<String>> {
    let mut paths = Vec::new();
    let mut visited: Vec<&str> = alloc::vec![source];
    let mut stack: Vec<String> = Vec::new();
    fn dfs<'a>(
        arcs: &'a [Arc],
        node: &str,
        sink: &str,
        visited: &mut Vec<&'a str>,
        stack: &mut Vec<String>,
        paths: &mut Vec<Vec<String>>,
    ) {
        if node == sink {
            paths.push(stack.clone());
            return;
        }
        for arc in arcs {
            if arc.from == node && !visited.iter().any(|&v| v == arc.to) {
                visited.push(&arc.to);
                stack.push(arc.id.clone());
                dfs(arcs, &arc.to, sink, visited, stack, paths);
                stack.pop();
                visited.pop();
            }
        }
    }
    dfs(arcs, source, sink, &mut visited, &mut stack, &mut paths);
    paths
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn res(id: &str, alpha: i64, beta: i64) -> Resource {
        Resource { id: id.into(), alpha: int(alpha), beta: int(beta) }
    }

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| String::from(*s)).collect()
    }

    /// The five-arc routing network whose equilibrium is worst possible for
    /// simultaneous play with the heavier first player, at weights (2, 1):
    /// arc betas ab = 3, ac = 2, ce = 7, and three free arcs.
    pub(crate) fn asymmetric_routing_game(cost_model: CostModel) -> GameInstance {
        let w1 = int(2);
        let w2 = int(1);
        let beta_ab = &w1 * &w2 + &w2 * &w2; // 3
        let beta_ac = &w1 * &w2; // 2
        let beta_ce = &w1 * &w1 + &w1 * &w2 + &w2 * &w2; // 7
        GameInstance::new(
            alloc::vec![
                Resource { id: "ab".into(), alpha: int(0), beta: beta_ab },
                Resource { id: "ac".into(), alpha: int(0), beta: beta_ac },
                Resource { id: "bd".into(), alpha: int(0), beta: int(0) },
                Resource { id: "be".into(), alpha: int(0), beta: int(0) },
                Resource { id: "cd".into(), alpha: int(0), beta: int(0) },
                Resource { id: "ce".into(), alpha: int(0), beta: beta_ce },
            ],
            alloc::vec![ids(&["ab", "bd"]), ids(&["ac", "cd"])],
            alloc::vec![ids(&["ab", "be"]), ids(&["ac", "ce"])],
            w1,
            w2,
            cost_model,
        )
        .unwrap()
    }

    #[test]
    fn uniform_costs_match_known_values() {
        let g = asymmetric_routing_game(CostModel::Uniform);
        // equilibrium profile (a-b-d, a-c-e)
        let p = ActionProfile::new(0, 1);
        assert_eq!(g.player_cost(p, Player::One).unwrap(), int(6));
        assert_eq!(g.player_cost(p, Player::Two).unwrap(), int(9));
        assert_eq!(g.social_cost(p).unwrap(), int(15));
        // near-optimal profile (a-c-d, a-b-e)
        let q = ActionProfile::new(1, 0);
        assert_eq!(g.social_cost(q).unwrap(), int(7));
    }

    #[test]
    fn proportional_cost_is_weight_times_uniform() {
        let uni = asymmetric_routing_game(CostModel::Uniform);
        let prop = asymmetric_routing_game(CostModel::Proportional);
        let p = ActionProfile::new(0, 1);
        assert_eq!(prop.player_cost(p, Player::One).unwrap(), int(12));
        for profile in uni.profiles() {
            for player in [Player::One, Player::Two] {
                assert_eq!(
                    prop.player_cost(profile, player).unwrap(),
                    uni.player_cost(profile, player).unwrap() * uni.weight(player)
                );
            }
        }
    }

    #[test]
    fn player_with_empty_action_pays_zero() {
        let g = GameInstance::new(
            alloc::vec![res("r", 3, 5)],
            alloc::vec![ids(&[])],
            alloc::vec![ids(&["r"])],
            int(1),
            int(2),
            CostModel::Uniform,
        )
        .unwrap();
        let p = ActionProfile::new(0, 0);
        assert_eq!(g.player_cost(p, Player::One).unwrap(), int(0));
        assert_eq!(g.player_cost(p, Player::Two).unwrap(), int(3 + 5 * 2));
    }

    #[test]
    fn all_zero_coefficients_give_zero_social_cost() {
        let g = GameInstance::new(
            alloc::vec![res("r", 0, 0)],
            alloc::vec![ids(&["r"])],
            alloc::vec![ids(&["r"])],
            int(1),
            int(1),
            CostModel::Uniform,
        )
        .unwrap();
        assert_eq!(g.social_cost(ActionProfile::new(0, 0)).unwrap(), int(0));
    }

    #[test]
    fn construction_validates_input() {
        assert_eq!(
            GameInstance::new(
                alloc::vec![res("r", -1, 0)],
                alloc::vec![ids(&["r"])],
                alloc::vec![ids(&["r"])],
                int(1),
                int(1),
                CostModel::Uniform,
            ),
            Err(GameError::NegativeCoefficient { resource: "r".into() })
        );
        assert_eq!(
            GameInstance::new(
                alloc::vec![res("r", 0, 1)],
                alloc::vec![ids(&["missing"])],
                alloc::vec![ids(&["r"])],
                int(1),
                int(1),
                CostModel::Uniform,
            ),
            Err(GameError::UnknownResource { player: 1, resource: "missing".into() })
        );
        assert_eq!(
            GameInstance::new(
                alloc::vec![res("r", 0, 1)],
                alloc::vec![ids(&["r"])],
                alloc::vec![ids(&["r"])],
                int(0),
                int(0),
                CostModel::Uniform,
            ),
            Err(GameError::InvalidWeights)
        );
    }

    #[test]
    fn duplicate_actions_are_dropped() {
        let g = GameInstance::new(
            alloc::vec![res("r", 0, 1), res("s", 0, 1)],
            alloc::vec![ids(&["r"]), ids(&["r"]), ids(&["s"])],
            alloc::vec![ids(&["s"])],
            int(1),
            int(1),
            CostModel::Uniform,
        )
        .unwrap();
        assert_eq!(g.action_count(Player::One), 2);
        assert_eq!(g.deduplicated_actions(), 1);
    }

    fn arc(id: &str, from: &str, to: &str, alpha: i64, beta: i64) -> Arc {
        Arc { id: id.into(), from: from.into(), to: to.into(), alpha: int(alpha), beta: int(beta) }
    }

    #[test]
    fn network_enumeration_matches_figure_actions() {
        // The asymmetric five-node network: player 1 routes a->d, player 2 a->e.
        let spec = NetworkSpec {
            nodes: ids(&["a", "b", "c", "d", "e"]),
            arcs: alloc::vec![
                arc("ab", "a", "b", 0, 3),
                arc("ac", "a", "c", 0, 2),
                arc("bd", "b", "d", 0, 0),
                arc("be", "b", "e", 0, 0),
                arc("cd", "c", "d", 0, 0),
                arc("ce", "c", "e", 0, 7),
            ],
            source1: "a".into(),
            sink1: "d".into(),
            source2: "a".into(),
            sink2: "e".into(),
            w1: int(2),
            w2: int(1),
            cost_model: CostModel::Uniform,
        };
        let g = from_network(&spec).unwrap();
        let acts1: alloc::collections::BTreeSet<Vec<String>> =
            g.action_ids(Player::One).into_iter().collect();
        let acts2: alloc::collections::BTreeSet<Vec<String>> =
            g.action_ids(Player::Two).into_iter().collect();
        assert_eq!(acts1, [ids(&["ab", "bd"]), ids(&["ac", "cd"])].into_iter().collect());
        assert_eq!(acts2, [ids(&["ab", "be"]), ids(&["ac", "ce"])].into_iter().collect());
        assert_eq!(g, asymmetric_routing_game(CostModel::Uniform));
    }

    #[test]
    fn network_with_cycle_enumerates_simple_paths_only() {
        let spec = NetworkSpec {
            nodes: ids(&["s", "a", "t"]),
            arcs: alloc::vec![
                arc("sa", "s", "a", 0, 1),
                arc("as", "a", "s", 0, 1),
                arc("at", "a", "t", 0, 1),
                arc("st", "s", "t", 0, 1),
            ],
            source1: "s".into(),
            sink1: "t".into(),
            source2: "s".into(),
            sink2: "t".into(),
            w1: int(1),
            w2: int(1),
            cost_model: CostModel::Uniform,
        };
        let g = from_network(&spec).unwrap();
        assert_eq!(g.action_count(Player::One), 2);
    }

    #[test]
    fn single_arc_network() {
        let spec = NetworkSpec {
            nodes: ids(&["s", "t"]),
            arcs: alloc::vec![arc("st", "s", "t", 1, 1)],
            source1: "s".into(),
            sink1: "t".into(),
            source2: "s".into(),
            sink2: "t".into(),
            w1: int(1),
            w2: int(1),
            cost_model: CostModel::Uniform,
        };
        let g = from_network(&spec).unwrap();
        assert_eq!(g.action_ids(Player::One), alloc::vec![ids(&["st"])]);
    }

    #[test]
    fn missing_path_is_an_error() {
        let spec = NetworkSpec {
            nodes: ids(&["s", "t", "u"]),
            arcs: alloc::vec![arc("st", "s", "t", 0, 1)],
            source1: "s".into(),
            sink1: "t".into(),
            source2: "s".into(),
            sink2: "u".into(),
            w1: int(1),
            w2: int(1),
            cost_model: CostModel::Uniform,
        };
        assert_eq!(from_network(&spec), Err(GameError::NoPath { player: 2 }));
    }

    #[test]
    fn arc_permutation_only_reorders_actions() {
        let mk = |order: [usize; 6]| {
            let arcs = alloc::vec![
                arc("ab", "a", "b", 0, 3),
                arc("ac", "a", "c", 0, 2),
                arc("bd", "b", "d", 0, 0),
                arc("be", "b", "e", 0, 0),
                arc("cd", "c", "d", 0, 0),
                arc("ce", "c", "e", 0, 7),
            ];
            let arcs: Vec<Arc> = order.iter().map(|&i| arcs[i].clone()).collect();
            from_network(&NetworkSpec {
                nodes: ids(&["a", "b", "c", "d", "e"]),
                arcs,
                source1: "a".into(),
                sink1: "d".into(),
                source2: "a".into(),
                sink2: "e".into(),
                w1: int(2),
                w2: int(1),
                cost_model: CostModel::Uniform,
            })
            .unwrap()
        };
        let g = mk([0, 1, 2, 3, 4, 5]);
        let h = mk([5, 3, 1, 4, 2, 0]);
        let as_sets = |g: &GameInstance, p| {
            g.action_ids(p).into_iter().collect::<alloc::collections::BTreeSet<_>>()
        };
        assert_eq!(as_sets(&g, Player::One), as_sets(&h, Player::One));
        assert_eq!(as_sets(&g, Player::Two), as_sets(&h, Player::Two));
    }

    #[test]
    fn monotone_in_coefficients() {
        let base = asymmetric_routing_game(CostModel::Uniform);
        let mut bumped = base.clone();
        bumped.resources[0].alpha += rat(1, 3);
        bumped.resources[5].beta += int(2);
        for p in base.profiles() {
            for player in [Player::One, Player::Two] {
                assert!(
                    bumped.player_cost(p, player).unwrap() >= base.player_cost(p, player).unwrap()
                );
            }
        }
    }
}

