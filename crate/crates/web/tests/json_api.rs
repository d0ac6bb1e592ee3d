use pqtriples_web::{census_grid_json, chamber_diagram_json, classify_chain_json};

#[test]
fn census_grid_flags_every_point() {
    let v = census_grid_json(1, 1, 2, "0:3", "0:3").unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 16);
    assert_eq!(v["allowed_count"], 14);
    assert_eq!(v["bound"], "1");
    let rejected: Vec<_> = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["allowed"] == false)
        .map(|p| (p["d_v"].as_i64().unwrap(), p["d_w"].as_i64().unwrap()))
        .collect();
    assert_eq!(rejected, vec![(0, 3), (3, 0)]);
}

#[test]
fn census_grid_rejects_bad_input() {
    assert!(census_grid_json(1, 1, 1, "0", "0").is_err());
    assert!(census_grid_json(0, 1, 2, "0", "0").is_err());
    assert!(census_grid_json(1, 1, 2, "3:0", "0").is_err());
    assert!(census_grid_json(1, 1, 2, "-1000:1000", "-1000:1000").is_err());
}

#[test]
fn chamber_diagram_worked_triple() {
    let v = chamber_diagram_json(2, 1, 3, 0, "", "2").unwrap();
    let walls: Vec<_> = v["walls"].as_array().unwrap().iter().map(|w| w["alpha"].as_str().unwrap()).collect();
    assert_eq!(walls, ["0", "3/2", "3", "9/2", "6"]);
    assert_eq!(v["chambers"].as_array().unwrap().len(), 4);
    assert_eq!(v["location"]["kind"], "chamber");
    assert_eq!(v["location"]["lower"], "3/2");
    assert_eq!(v["dualized"], false);
}

#[test]
fn chamber_diagram_dualizes_and_needs_cap() {
    let v = chamber_diagram_json(1, 2, 2, 3, "", "").unwrap();
    assert_eq!(v["dualized"], true);
    assert_eq!(v["triple"], serde_json::json!([2, 1, -3, -2]));
    assert_eq!(v["alpha_max"], "2");
    assert!(v["location"].is_null());

    assert!(chamber_diagram_json(1, 1, 0, 0, "", "").is_err());
    let square = chamber_diagram_json(1, 1, 0, 0, "4", "3").unwrap();
    assert_eq!(square["alpha_max"], "unbounded");
    assert_eq!(square["location"]["kind"], "chamber");
    assert!(chamber_diagram_json(1, 1, 0, 0, "4", "x").is_err());
}

#[test]
fn classify_chain_reports_grading() {
    let v = classify_chain_json("1:2:V,1:1:W,1:0:V", 2).unwrap();
    assert_eq!(v["is_minimum"], false);
    assert_eq!(v["grading"].as_array().unwrap().len(), 5);
    let total: u64 = v["grading"].as_array().unwrap().iter().map(|u| u["rank"].as_u64().unwrap()).sum();
    assert_eq!(total, 9);

    let two = classify_chain_json("2:3:V,1:0:W", 2).unwrap();
    assert_eq!(two["verdict"], "Minimum");
    assert!(classify_chain_json("1:0:V,1:0:V", 2).is_err());
}
