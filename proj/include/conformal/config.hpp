#pragma once

namespace conformal {

// Global engine configuration. All toggles default to the readings fixed in
// the tool's documentation; the CLI exposes them through --flag / --max-degree.
struct Config {
    // Hard cap on any single exponent; exceeding it aborts the computation.
    int max_exponent = 64;
    // apply_delta refuses cochains of higher degree than this.
    int max_delta_input_degree = 3;
    // Default polynomial degree bound used by the exact linear solves
    // (left centers, span membership). -1 means "derive from the input".
    int default_degree_bound = -1;

    // Reading of <x,[y_{lam-partial} z]>_mu: substituted partials pair on the
    // right slot (factor mu). The alternative pairs them on the left (-mu).
    bool invariance_left_slot = false;
    // Also check the (2<->3) exchange of l3 in condition (d), using the
    // lam2 -> -partial-lam1-lam2 convention.
    bool l3_third_slot_check = false;
    // Isotropy test per the literal symmetric-pairing display instead of the
    // proof's computation.
    bool pairing_literal = false;
    // Alternative right-module axiom reading: lam+mu on the second term
    // instead of -partial-lam.
    bool right_module_alt = false;
};

Config& config();

} // namespace conformal
