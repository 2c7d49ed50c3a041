#ifndef AMOEBA_ERRORS_HPP
#define AMOEBA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace amoeba {

// Domain error: invalid arguments, infeasible operations, resource caps.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, permutations).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_ = 0;
};

// Requested target copy is not reachable by feasible edge-replacements.
// Carries the group-order/orbit certificate of the computed group.
class UnreachableCopyError : public Error {
public:
    UnreachableCopyError(const std::string& what, std::string group_order,
                         std::vector<std::vector<int>> orbits)
        : Error(what), group_order_(std::move(group_order)), orbits_(std::move(orbits)) {}
    const std::string& group_order() const { return group_order_; }
    const std::vector<std::vector<int>>& orbits() const { return orbits_; }

private:
    std::string group_order_;
    std::vector<std::vector<int>> orbits_;
};

// Two routes that must agree produced different answers. Always a bug signal.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace amoeba

#endif // AMOEBA_ERRORS_HPP
