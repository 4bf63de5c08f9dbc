use novikov_testkit::suites;

const CASES: u32 = 256;

#[test]
fn admissible_quadruples_give_novikov_families() {
    suites::constr2(CASES).assert_ok();
}

#[test]
fn co_admissible_coalgebras_give_novikov_coalgebras() {
    suites::co_constr(CASES).assert_ok();
}

#[test]
fn semidirect_novikov_iff_representation() {
    suites::semidirect_novikov_iff(CASES).assert_ok();
}

#[test]
fn semidirect_admissible_iff_representation() {
    suites::semidirect_admdiff_iff(CASES).assert_ok();
}

#[test]
fn nybe_iff_novikov_o_operator() {
    suites::novikov_oop_iff(CASES).assert_ok();
}

#[test]
fn nybe_iff_novikov_o_operator_on_doubles() {
    suites::novikov_oop_fixtures(CASES).assert_ok();
}

#[test]
fn admissible_aybe_iff_admissible_o_operator() {
    suites::admissible_oop_iff(CASES).assert_ok();
}

#[test]
fn admissible_o_operators_induce_novikov_ones() {
    suites::induced_oop(CASES).assert_ok();
}

#[test]
fn o_operator_ybe_square_at_minus_half() {
    suites::oop_ybe_square(CASES).assert_ok();
}

#[test]
fn residuals_match_naive_expansion() {
    suites::oracle(CASES).assert_ok();
}

#[test]
fn symbolic_verdicts_survive_specialization() {
    suites::specialization(CASES).assert_ok();
}

#[test]
fn condition_a_iff_q_is_a_derivation() {
    suites::cond_a_iff_derivation(CASES).assert_ok();
}

#[test]
fn coboundary_of_admissible_solution_is_a_bialgebra() {
    suites::diff_coboundary(CASES).assert_ok();
}

#[test]
fn pre_novikov_induction_commutes() {
    suites::zinbiel_commutation(CASES).assert_ok();
}

#[test]
fn novikov_iff_dual_coalgebra() {
    suites::dual_coalgebra(CASES).assert_ok();
}

#[test]
fn verdicts_are_basis_independent() {
    suites::basis_invariance(CASES).assert_ok();
}
