mod support;

#[test]
fn field_axioms() {
    support::field_axioms().unwrap();
}

#[test]
fn ring_axioms() {
    support::ring_axioms().unwrap();
}

#[test]
fn evaluation_is_a_ring_map() {
    support::evaluation_is_a_ring_map().unwrap();
}

#[test]
fn monomial_order_axioms() {
    support::monomial_order_axioms().unwrap();
}

#[test]
fn buchberger_post_hoc() {
    support::buchberger_post_hoc().unwrap();
}

#[test]
fn pluecker_identity() {
    support::pluecker_identity().unwrap();
}

#[test]
fn incidence_matches_rank() {
    support::incidence_matches_rank().unwrap();
}

#[test]
fn l1_lines_meet_their_planes() {
    support::l1_lines_meet_their_planes().unwrap();
}

#[test]
fn scalar_round_trip() {
    support::scalar_round_trip().unwrap();
}

#[test]
fn poly_round_trip() {
    support::poly_round_trip().unwrap();
}
