use novikov_testkit::controls::{all_ids, controls};

#[test]
fn every_identity_has_a_failing_control() {
    let cs = controls();
    for id in all_ids() {
        assert!(cs.iter().any(|c| c.id == id), "no control for {id}");
    }
}

#[test]
fn controls_fail_with_the_expected_witness() {
    let bad: Vec<String> = controls().iter().filter_map(|c| c.mismatch()).collect();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn witnesses_agree_with_the_naive_expansion() {
    use novikov_core::structures::{axiom, check::tuples};
    for c in controls().iter().filter(|c| c.param.is_none()) {
        let Ok(ax) = axiom(c.id) else { continue };
        if ax.spaces.is_empty() {
            continue;
        }
        let env = c.world.env();
        let dims: Vec<usize> = ax.spaces.iter().map(|&s| env.dim(s).unwrap()).collect();
        let first = tuples(&dims)
            .into_iter()
            .map(|t| (novikov_testkit::naive::residual(c.id, &c.world, &t), t))
            .find(|(r, _)| r.iter().any(|p| !p.is_zero()));
        let (res, tup) = first.unwrap_or_else(|| panic!("{} holds naively", c.id));
        assert_eq!(tup, c.tuple, "{}", c.id);
        let want: Vec<_> = c.residual.iter().map(|&k| novikov_core::Poly::from_int(k)).collect();
        assert_eq!(res, want, "{}", c.id);
    }
}

#[test]
fn reports_are_deterministic() {
    for c in controls() {
        assert_eq!(c.report().unwrap(), c.report().unwrap(), "{}", c.id);
    }
}
