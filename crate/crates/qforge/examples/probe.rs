use qforge::catalog::{algebra_for, CatalogKey, Family};
use qforge::F2;
use qforge::modrep::{uniserial_exists, uniserial_exists_string_check};
use qforge::quiver::parse_path;

fn main() {
    let t = std::time::Instant::now();
    let a = algebra_for(&CatalogKey::Plain { family: Family::One, d: 4, c: F2::new(0) }).unwrap();
    println!("build L1 d4: {} ms (dim {}, loewy {})", t.elapsed().as_millis(), a.dim(), a.loewy_length());

    let q = a.quiver().clone();
    for word in ["(g b a)^4", "(a g b)^4"] {
        let w = parse_path(&q, word).unwrap();
        let seq = w.vertex_sequence(&q);
        let t = std::time::Instant::now();
        let r = uniserial_exists(&a, &seq, 1 << 22);
        println!("search {:?} (len {}): {:?} in {} ms", word, seq.len(), r, t.elapsed().as_millis());
        let t = std::time::Instant::now();
        let s = uniserial_exists_string_check(&a, &seq);
        println!("checker: {:?} in {} ms", s, t.elapsed().as_millis());
    }
    let t = std::time::Instant::now();
    let r = uniserial_exists(&a, &[1,0,1], 1 << 22);
    println!("short search: {:?} in {} ms", r, t.elapsed().as_millis());
}
