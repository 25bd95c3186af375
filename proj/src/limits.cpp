#include "ordkernel/limits.hpp"

namespace ordkernel {

Limits Limits::with_global(const boost::multiprecision::cpp_int& n) {
  Limits l;
  l.segment_limit = n;
  l.ordinal_code_limit = n;
  std::size_t s = n > 1000000000 ? std::size_t(1000000000) : n.convert_to<std::size_t>();
  l.pow_base_limit = s;
  l.enum_field_limit = s;
  l.replacement_field_limit = s;
  l.truncation_limit = s;
  return l;
}

Limits& default_limits() {
  static Limits l;
  return l;
}

}  // namespace ordkernel
