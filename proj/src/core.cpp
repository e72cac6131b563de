#include "mpchoice/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mpchoice/error.hpp"

namespace mpchoice {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::RegimeDegenerate: return "RegimeDegenerate";
    case ErrorCode::BadArgs: return "BadArgs";
    case ErrorCode::BadProbabilities: return "BadProbabilities";
    case ErrorCode::ExactSizesRequired: return "ExactSizesRequired";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

const std::vector<std::uint64_t>& GraphSpec::exact() const {
  if (!exact_) throw Error(ErrorCode::ExactSizesRequired, "spec has no exact part sizes");
  return *exact_;
}

std::uint64_t GraphSpec::total_vertices() const {
  std::uint64_t total = 0;
  for (auto n : exact()) {
    if (total > std::numeric_limits<std::uint64_t>::max() - n)
      throw Error(ErrorCode::InstanceTooLarge, "vertex count overflows");
    total += n;
  }
  return total;
}

GraphSpec make_spec(std::span<const std::uint64_t> sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::EmptyInstance, "need at least 2 parts");
  std::vector<std::uint64_t> sorted(sizes.begin(), sizes.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 2)
    throw Error(ErrorCode::SizeTooSmall, "part size " + std::to_string(sorted.front()) + " < 2");

  GraphSpec spec;
  spec.log2_.reserve(sorted.size());
  for (auto n : sorted) spec.log2_.push_back(std::log2(static_cast<double>(n)));
  spec.exact_ = std::move(sorted);
  return spec;
}

GraphSpec make_spec_log2(std::span<const double> sizes_log2) {
  if (sizes_log2.size() < 2) throw Error(ErrorCode::EmptyInstance, "need at least 2 parts");
  std::vector<double> sorted(sizes_log2.begin(), sizes_log2.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) throw Error(ErrorCode::SizeTooSmall, "non-finite log2 size");
  }
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1.0)
    throw Error(ErrorCode::SizeTooSmall,
                "log2 part size " + std::to_string(sorted.front()) + " < 1");

  GraphSpec spec;
  spec.log2_ = std::move(sorted);
  return spec;
}

Exponents exponents(const GraphSpec& spec) {
  Exponents e;
  const double top = spec.log2_largest();
  const auto& l2 = spec.sizes_log2();
  e.k.reserve(l2.size() - 1);
  for (std::size_t i = 0; i + 1 < l2.size(); ++i) e.k.push_back(top / l2[i]);
  return e;
}

AsymptoticDiagnostics diagnostics(const GraphSpec& spec) {
  AsymptoticDiagnostics d;
  const double top = spec.log2_largest();
  if (top <= 1.0) {
    d.alpha = std::numeric_limits<double>::quiet_NaN();
    d.alpha_threshold = std::numeric_limits<double>::quiet_NaN();
    return d;
  }
  const double loglog = std::log2(top);
  d.loglog_defined = true;
  d.alpha = spec.log2_size(0) / loglog;
  d.alpha_threshold = 2.0 * std::sqrt(top / loglog);
  d.regime_ok = d.alpha >= d.alpha_threshold;
  return d;
}

}  // namespace mpchoice
