#include "minedit/editcost.hpp"

#include "minedit/errors.hpp"

namespace minedit {

namespace {

EditCostResult make_result(std::size_t distance, std::size_t length, Granularity granularity) {
  if (length == 0)
    throw Error(ErrorKind::EmptySource, "source program has no " +
                                            std::string(to_string(granularity)) + "s");
  return {distance, length, granularity,
          static_cast<double>(distance) / static_cast<double>(length)};
}

} // namespace

EditCostResult edit_cost(const NormalizedProgram& source, const NormalizedProgram& target,
                         Granularity granularity) {
  if (granularity == Granularity::line) {
    if (source.lines.empty()) return make_result(0, 0, granularity);
    return make_result(levenshtein(source.lines, target.lines), source.lines.size(), granularity);
  }
  const auto source_tokens = tokens_of(source);
  if (source_tokens.empty()) return make_result(0, 0, granularity);
  const auto target_tokens = tokens_of(target);
  return make_result(levenshtein(source_tokens, target_tokens), source_tokens.size(), granularity);
}

} // namespace minedit
