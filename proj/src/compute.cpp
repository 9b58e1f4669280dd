#include "latsum/latsum.hpp"

namespace latsum {

SumValue compute_sum(const SumIndex& idx, const LatticeSpec& lat, Method method) {
  switch (method) {
    case Method::EISENSTEIN_ORACLE:
      return sum_eisenstein(idx, lat);
    case Method::TRIG_SERIES:
      return sum_fast(idx, lat);
    case Method::RECURRENCE:
      return sum_recurrence(idx, lat);
    case Method::SYMBOLIC_ELLIPTIC:
      return sum_symbolic(idx, lat);
  }
  throw PreconditionError("unknown method");
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::EISENSTEIN_ORACLE, Method::TRIG_SERIES, Method::RECURRENCE, Method::SYMBOLIC_ELLIPTIC})
    if (name == method_name(m)) return m;
  throw PreconditionError("unknown method '" + name + "'");
}

}  // namespace latsum
