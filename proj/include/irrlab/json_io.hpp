#ifndef IRRLAB_JSON_IO_HPP
#define IRRLAB_JSON_IO_HPP

#include <json.hpp>

#include "irrlab/irregularity.hpp"
#include "irrlab/oracle.hpp"

namespace irrlab {

// nlohmann::json uses std::map underneath, so object keys serialize sorted;
// together with integer-only values this keeps reports byte-stable.

inline void to_json(nlohmann::json& j, const DegreeSequence& d) { j = d.values(); }

inline void to_json(nlohmann::json& j, const IrregularityReport& r) {
  j = nlohmann::json{
      {"n", r.n}, {"m", r.m}, {"irr", r.irr}, {"irr_t", r.irr_t}, {"degree_sequence", r.degree_sequence}};
}

inline void to_json(nlohmann::json& j, const Ratio& r) {
  j = nlohmann::json{{"num", r.num}, {"den", r.den}};
}

inline void to_json(nlohmann::json& j, const SequenceMaxResult& r) {
  j = nlohmann::json{{"max_value", r.max_value}, {"argmax", r.argmax}};
}

inline void to_json(nlohmann::json& j, const CensusResult& r) {
  j = nlohmann::json{{"n", r.n},
                     {"max_value", r.max_value},
                     {"class_count", r.class_count},
                     {"representatives", r.representatives},
                     {"labeled_counts", r.labeled_counts},
                     {"family_subset_confirmed", r.family_subset_confirmed}};
}

inline void to_json(nlohmann::json& j, const AuditResult& r) {
  j = nlohmann::json{{"bound_id", r.bound_id},
                     {"instances", r.instances},
                     {"violations", r.violations},
                     {"max_ratio", r.max_ratio}};
}

}  // namespace irrlab

#endif  // IRRLAB_JSON_IO_HPP
