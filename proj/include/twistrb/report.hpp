#pragma once

#include "twistrb/qlinalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace twistrb {

/// One failing instance of an identity: which identity, on which basis
/// tuple (1-based, matching e_1..e_d), and the nonzero residual.
struct Failure {
    std::string identity;
    std::vector<std::size_t> indices;
    Vector residual;
};

/// Outcome of a validity check. Empty means the object passed.
class Report {
  public:
    bool ok() const noexcept { return failures_.empty(); }
    explicit operator bool() const noexcept { return ok(); }
    const std::vector<Failure>& failures() const noexcept { return failures_; }

    void add(std::string identity, std::vector<std::size_t> zero_based, Vector residual);
    /// Records a failure when `residual` is nonzero.
    void check(const std::string& identity, const std::vector<std::size_t>& zero_based, Vector residual);
    void merge(const Report& other, const std::string& prefix = {});

    std::string describe(std::size_t max_lines = 10) const;

  private:
    std::vector<Failure> failures_;
};

} // namespace twistrb
