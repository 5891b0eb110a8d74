#include "opx/motzkin.hpp"

namespace opx {

namespace {

void extend(int level, int remaining, int to, std::vector<Step>& prefix,
            int start, std::vector<MotzkinPath>& out) {
  if (remaining == 0) {
    if (level == to) out.emplace_back(start, prefix);
    return;
  }
  if (std::abs(level - to) > remaining) return;
  for (Step s : {Step::NE, Step::E, Step::SE}) {
    int next = level + MotzkinPath::delta(s);
    if (next < 0) continue;
    prefix.push_back(s);
    extend(next, remaining - 1, to, prefix, start, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int length, int from, int to) {
  if (length < 0 || from < 0 || to < 0)
    throw usage_error("enumerate_paths: negative argument");
  if (length > kEnumerationGuard)
    throw usage_error("enumerate_paths: length exceeds guard of " +
                      std::to_string(kEnumerationGuard));
  std::vector<MotzkinPath> out;
  std::vector<Step> prefix;
  extend(from, length, to, prefix, from, out);
  return out;
}

}  // namespace opx
