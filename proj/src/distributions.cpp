#include "ardlkit/distributions.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>

namespace ardlkit::dist {

double student_t_two_sided(double t, double df) {
  if (std::isnan(t) || !(df > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  boost::math::students_t d(df);
  return 2.0 * boost::math::cdf(boost::math::complement(d, std::fabs(t)));
}

double f_upper(double f, double d1, double d2) {
  if (std::isnan(f) || !(d1 > 0.0) || !(d2 > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  boost::math::fisher_f d(d1, d2);
  return boost::math::cdf(boost::math::complement(d, f));
}

double chi2_upper(double x, double df) {
  if (std::isnan(x) || !(df > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  boost::math::chi_squared d(df);
  return boost::math::cdf(boost::math::complement(d, x));
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace ardlkit::dist
