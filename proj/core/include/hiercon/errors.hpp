#pragma once

#include <stdexcept>
#include <string>

namespace hiercon {

/// Machine-checkable failure codes for every validation and numeric error
/// the library can raise.
enum class errc {
    too_few_vertices,
    edge_order_violation,
    duplicate_edge,
    non_positive_weight,
    reverse_order_violation,
    duplicate_reverse_edge,
    infeasible_reverse_count,
    not_a_star,
    convergence_failure,
    all_eigenvalues_zero,
    dimension_mismatch,
    no_spanning_tree,
    invalid_parameter,
    parse_error,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace hiercon
