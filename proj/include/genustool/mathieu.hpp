#pragma once

#include <optional>
#include <string>

#include "genustool/bundles.hpp"
#include "genustool/rep.hpp"

namespace genustool {

// Verification transcript for one bundled display: product-one status of
// (g1, g2, g3^-1), generated order against the classical order, genus over
// the deleted permutation module, and, when the display is inconsistent, the
// first element implied by the other two.
struct DisplayVerification {
    DisplayRecord record;
    BigInt expected_order;
    BigInt generated_order;
    GenusReport genus;
    bool ok = false;  // product, generation and genus all as expected
    std::optional<std::string> implied_first_element;  // diagnose_product output
    std::optional<std::string> implied_cycle_type;
};

// Classical order of the named Mathieu group (M11, M12, M22, M23, M24).
BigInt mathieu_order(const std::string& display_id);

DisplayVerification verify_display(const DisplayRecord& record);

}  // namespace genustool
