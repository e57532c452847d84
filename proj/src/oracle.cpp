#include "ordertype/condense.hpp"
#include "ordertype/generate.hpp"
#include "ordertype/normalize.hpp"
#include "ordertype/points.hpp"
#include "ordertype/rewrite.hpp"

namespace ordertype {

OracleReport checkOracle(const OrderTerm& t, Level level, std::size_t pairs, std::uint64_t seed) {
  OracleReport report;
  report.shape = normalize(classShape(t, level));
  report.shapeAgrees = canonicalForm(report.shape) == canonicalForm(cc(t, level).quotient);

  const auto points = samplePoints(t, 64, seed);
  report.points = points.size();
  if (points.empty()) return report;

  std::vector<ClassIndex> classes;
  classes.reserve(points.size());
  for (const auto& p : points) classes.push_back(classIndex(t, p, level));
  const OrderTerm& shape = classes.front().shape;

  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t i = rng.below(points.size());
    const std::size_t j = rng.below(points.size());
    const Cardinality interval = intervalClass(t, points[i], points[j]);
    const bool same = classes[i].code == classes[j].code;
    ++report.pairs;
    if (same != interval.isSmall(level)) {
      if (report.mismatches.size() < 8) report.mismatches.push_back({points[i], points[j], interval, same});
      ++report.mismatchCount;
    }
    const auto byPoint = comparePoints(t, points[i], points[j]);
    const auto byClass = comparePoints(shape, classes[i].code, classes[j].code);
    if ((byPoint < 0 && byClass > 0) || (byPoint > 0 && byClass < 0)) ++report.monotonicityViolations;
  }
  return report;
}

}  // namespace ordertype
