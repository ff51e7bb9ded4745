#ifndef IRRLAB_ERRORS_HPP
#define IRRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irrlab {

enum class errc {
  loop_edge,
  index_out_of_range,
  duplicate_edge,
  malformed_graph6,
  unsupported_order,
  order_too_large,
  order_too_small,
  not_sorted,
  invalid_degree,
  edge_present,
  edge_absent,
  overflow_guard,
  not_graphical,
  not_tree_sequence,
  invalid_q,
  invalid_spec,
  not_a_tree,
  already_star,
  order_guard,
  bad_input,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::loop_edge:          return "loop edge";
    case errc::index_out_of_range: return "index out of range";
    case errc::duplicate_edge:     return "duplicate edge";
    case errc::malformed_graph6:   return "malformed graph6";
    case errc::unsupported_order:  return "unsupported order";
    case errc::order_too_large:    return "order too large";
    case errc::order_too_small:    return "order too small";
    case errc::not_sorted:         return "not sorted";
    case errc::invalid_degree:     return "invalid degree";
    case errc::edge_present:       return "edge present";
    case errc::edge_absent:        return "edge absent";
    case errc::overflow_guard:     return "overflow guard";
    case errc::not_graphical:      return "not graphical";
    case errc::not_tree_sequence:  return "not a tree sequence";
    case errc::invalid_q:          return "invalid universal count";
    case errc::invalid_spec:       return "invalid construction spec";
    case errc::not_a_tree:         return "not a tree";
    case errc::already_star:       return "already a star";
    case errc::order_guard:        return "order guard";
    case errc::bad_input:          return "bad input";
  }
  return "unknown";
}

// Every failure the library raises carries one of the codes above; the what()
// string is "<code name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace irrlab

#endif  // IRRLAB_ERRORS_HPP
