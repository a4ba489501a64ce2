#include "multigame/strategy.hpp"

namespace multigame {

FloatStrategy to_float(const ExactStrategy& s) {
  FloatStrategy out;
  if (s.threshold.is_neg_inf()) {
    out.threshold = Extended<double>::neg_inf();
  } else if (s.threshold.is_pos_inf()) {
    out.threshold = Extended<double>::pos_inf();
  } else {
    out.threshold = Extended<double>(s.threshold.value().get_d());
  }
  out.orientation = s.orientation;
  out.alpha = s.alpha.get_d();
  return out;
}

}  // namespace multigame
