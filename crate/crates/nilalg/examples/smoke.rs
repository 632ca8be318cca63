use nilalg::field::make_field;

fn main() {
    for (p, m) in [(2u32, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)] {
        let field = make_field(p, m).unwrap();
        let t0 = std::time::Instant::now();
        let recs = nilalg::classify(3, &field, false).unwrap();
        let labels: Vec<&str> = recs.iter().map(|r| r.label.as_str()).collect();
        println!(
            "dim 3 over GF({}): {} classes [{:?}]  {:?}",
            field.q(),
            recs.len(),
            t0.elapsed(),
            labels
        );
    }
}
