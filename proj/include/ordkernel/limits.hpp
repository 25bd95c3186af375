#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace ordkernel {

// Resource caps for the enumeration-flavoured operations. The CLI's --bound
// flag (or ORDKERNEL_BOUND) replaces every cap with one global value.
struct Limits {
  boost::multiprecision::cpp_int segment_limit = 100000;  // initial_segment size
  boost::multiprecision::cpp_int ordinal_code_limit = 64;  // code_of_ordinal n
  std::size_t pow_base_limit = 12;          // pow_witness |a|
  std::size_t enum_field_limit = 7;         // enumerate_set_codes field bound
  std::size_t replacement_field_limit = 512;  // replacement image field size
  std::size_t truncation_limit = 6;         // so-structure rank

  static Limits with_global(const boost::multiprecision::cpp_int& n);
};

Limits& default_limits();

}  // namespace ordkernel
