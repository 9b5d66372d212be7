#pragma once

#include "crystalpoly/explore.hpp"
#include "crystalpoly/forms.hpp"
#include "crystalpoly/sequences.hpp"

#include <set>
#include <string>
#include <vector>

namespace crystalpoly {

// Tagged, truncation-stamped family of forms for export.
struct FormSet {
    std::string tag;  // XiPlus, XiMinus, XiPrimeA, XiPrimeAffine, XiAffineRestricted
    Index window = 0;
    Index depth = 0;
    std::set<LinearForm> forms;
};

// All encoders are deterministic: map iteration supplies a canonical order,
// so identical values serialize to identical bytes.
std::string vector_to_json(const FinSuppVector& x);
std::string form_to_json(const LinearForm& f);
std::string form_set_to_json(const FormSet& fs);
std::string form_sets_to_json(const std::vector<FormSet>& sets);
std::string graph_to_json(const CrystalGraph& g);
std::string graph_to_dot(const CrystalGraph& g);
std::string oracle_report_to_json(const OracleReport& r);

}  // namespace crystalpoly
