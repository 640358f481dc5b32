//! Exact enumeration of pure Nash equilibria, subgame-perfect outcomes under
//! adversarial tie-breaking, social optima, and the instance-level price of
//! anarchy.

use crate::exactmath::Rational;
use crate::game::{ActionProfile, GameInstance, Player};
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    Nash,
    SubgamePerfect,
}

/// Which equilibrium notion the price of anarchy is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Simultaneous,
    Sequential { leader: Player },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquilibriumError {
    /// No pure Nash equilibrium. Affine two-player congestion games always
    /// have one, so this signals a malformed instance.
    NoEquilibrium,
    /// Optimum cost is zero while some equilibrium has positive cost.
    UnboundedPoa,
}

impl fmt::Display for EquilibriumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquilibriumError::NoEquilibrium => {
                write!(f, "no pure Nash equilibrium found (malformed instance)")
            }
            EquilibriumError::UnboundedPoa => {
                write!(f, "social optimum has cost zero but an equilibrium has positive cost")
            }
        }
    }
}

impl core::error::Error for EquilibriumError {}

/// Equilibria, optimum, and exact price of anarchy of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumReport {
    pub kind: EquilibriumKind,
    pub leader: Option<Player>,
    pub equilibrium_profiles: Vec<ActionProfile>,
    pub worst_equilibrium_profile: ActionProfile,
    pub worst_equilibrium_cost: Rational,
    pub optimum_profile: ActionProfile,
    pub optimum_cost: Rational,
    pub poa: Rational,
    /// Both worst equilibrium and optimum cost zero; `poa` is 1 by convention.
    pub degenerate_zero: bool,
}

fn cost_tables(g: &GameInstance) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n1 = g.action_count(Player::One);
    let n2 = g.action_count(Player::Two);
    let mut c1 = Vec::with_capacity(n1);
    let mut c2 = Vec::with_capacity(n1);
    for a1 in 0..n1 {
        let mut row1 = Vec::with_capacity(n2);
        let mut row2 = Vec::with_capacity(n2);
        for a2 in 0..n2 {
            let p = ActionProfile::new(a1, a2);
            row1.push(g.player_cost(p, Player::One).expect("profile in range"));
            row2.push(g.player_cost(p, Player::Two).expect("profile in range"));
        }
        c1.push(row1);
        c2.push(row2);
    }
    (c1, c2)
}

/// All profiles where no player can strictly improve by a unilateral change.
pub fn nash_equilibria(g: &GameInstance) -> Vec<ActionProfile> {
    let (c1, c2) = cost_tables(g);
    let n1 = g.action_count(Player::One);
    let n2 = g.action_count(Player::Two);
    let mut out = Vec::new();
    for a1 in 0..n1 {
        'profile: for a2 in 0..n2 {
            for b1 in 0..n1 {
                if c1[b1][a2] < c1[a1][a2] {
                    continue 'profile;
                }
            }
            for b2 in 0..n2 {
                if c2[a1][b2] < c2[a1][a2] {
                    continue 'profile;
                }
            }
            out.push(ActionProfile::new(a1, a2));
        }
    }
    out
}

/// Checks one profile against the weak-inequality equilibrium conditions.
pub fn is_nash(g: &GameInstance, p: ActionProfile) -> bool {
    nash_equilibria(g).contains(&p)
}

/// Outcomes of subgame-perfect play with the given leader.
///
/// Follower ties are broken adversarially: every selection function that picks
/// one best response per leader action is enumerated, and for each, every
/// cost-minimal leader action contributes an outcome. The result is the
/// deduplicated union, sorted.
pub fn spe_outcomes(g: &GameInstance, leader: Player) -> Vec<ActionProfile> {
    let (c1, c2) = cost_tables(g);
    let n1 = g.action_count(Player::One);
    let n2 = g.action_count(Player::Two);
    let (n_lead, n_follow) = match leader {
        Player::One => (n1, n2),
        Player::Two => (n2, n1),
    };
    // Orient the tables so `lead` indexes the first mover.
    let leader_cost = |lead: usize, follow: usize| -> &Rational {
        match leader {
            Player::One => &c1[lead][follow],
            Player::Two => &c2[follow][lead],
        }
    };
    let follower_cost = |lead: usize, follow: usize| -> &Rational {
        match leader {
            Player::One => &c2[lead][follow],
            Player::Two => &c1[follow][lead],
        }
    };
    let to_profile = |lead: usize, follow: usize| match leader {
        Player::One => ActionProfile::new(lead, follow),
        Player::Two => ActionProfile::new(follow, lead),
    };

    // Best responses of the follower per leader action.
    let mut best_responses: Vec<Vec<usize>> = Vec::with_capacity(n_lead);
    for lead in 0..n_lead {
        let best = (0..n_follow).map(|f| follower_cost(lead, f)).min().expect("nonempty");
        best_responses
            .push((0..n_follow).filter(|&f| follower_cost(lead, f) == best).collect());
    }

    // Walk every selection function with an odometer over the response lists.
    let mut outcomes: BTreeSet<ActionProfile> = BTreeSet::new();
    let mut choice = alloc::vec![0usize; n_lead];
    loop {
        let selected: Vec<usize> = (0..n_lead).map(|l| best_responses[l][choice[l]]).collect();
        let best = (0..n_lead).map(|l| leader_cost(l, selected[l])).min().expect("nonempty");
        for lead in 0..n_lead {
            if leader_cost(lead, selected[lead]) == best {
                outcomes.insert(to_profile(lead, selected[lead]));
            }
        }
        // advance odometer
        let mut pos = 0;
        loop {
            if pos == n_lead {
                return outcomes.into_iter().collect();
            }
            choice[pos] += 1;
            if choice[pos] < best_responses[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Exhaustive minimum of the social cost; ties broken by the lexicographically
/// smallest index pair.
pub fn social_optimum(g: &GameInstance) -> (ActionProfile, Rational) {
    let mut best: Option<(ActionProfile, Rational)> = None;
    for p in g.profiles() {
        let cost = g.social_cost(p).expect("profile in range");
        match &best {
            Some((_, c)) if *c <= cost => {}
            _ => best = Some((p, cost)),
        }
    }
    best.expect("actions are nonempty")
}

/// Worst equilibrium cost over the optimum cost, all exact.
pub fn instance_poa(g: &GameInstance, mode: Mode) -> Result<EquilibriumReport, EquilibriumError> {
    let (kind, leader, profiles) = match mode {
        Mode::Simultaneous => (EquilibriumKind::Nash, None, nash_equilibria(g)),
        Mode::Sequential { leader } => {
            (EquilibriumKind::SubgamePerfect, Some(leader), spe_outcomes(g, leader))
        }
    };
    if profiles.is_empty() {
        return Err(EquilibriumError::NoEquilibrium);
    }
    let (optimum_profile, optimum_cost) = social_optimum(g);
    let mut worst = profiles[0];
    let mut worst_cost = g.social_cost(worst).expect("profile in range");
    for &p in &profiles[1..] {
        let c = g.social_cost(p).expect("profile in range");
        if c > worst_cost {
            worst = p;
            worst_cost = c;
        }
    }
    let (poa, degenerate_zero) = if optimum_cost.is_zero() {
        if worst_cost.is_zero() {
            (Rational::one(), true)
        } else {
            return Err(EquilibriumError::UnboundedPoa);
        }
    } else {
        (&worst_cost / &optimum_cost, false)
    };
    Ok(EquilibriumReport {
        kind,
        leader,
        equilibrium_profiles: profiles,
        worst_equilibrium_profile: worst,
        worst_equilibrium_cost: worst_cost,
        optimum_profile,
        optimum_cost,
        poa,
        degenerate_zero,
    })
}
