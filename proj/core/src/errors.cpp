#include "hiercon/errors.hpp"

namespace hiercon {

const char* errc_name(errc code) {
    switch (code) {
        case errc::too_few_vertices: return "TooFewVertices";
        case errc::edge_order_violation: return "EdgeOrderViolation";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::non_positive_weight: return "NonPositiveWeight";
        case errc::reverse_order_violation: return "ReverseOrderViolation";
        case errc::duplicate_reverse_edge: return "DuplicateReverseEdge";
        case errc::infeasible_reverse_count: return "InfeasibleReverseCount";
        case errc::not_a_star: return "NotAStar";
        case errc::convergence_failure: return "ConvergenceFailure";
        case errc::all_eigenvalues_zero: return "AllEigenvaluesZero";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::no_spanning_tree: return "NoSpanningTree";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace hiercon
