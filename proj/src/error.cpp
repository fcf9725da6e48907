#include "k3inv/error.hpp"

namespace k3inv {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::degenerate_lattice: return "E_DEGENERATE_LATTICE";
    case Errc::group_too_large: return "E_GROUP_TOO_LARGE";
    case Errc::unknown_name: return "E_UNKNOWN_NAME";
    case Errc::dimension_mismatch: return "E_DIMENSION_MISMATCH";
    case Errc::index_out_of_range: return "E_INDEX_OUT_OF_RANGE";
    case Errc::invalid_variant: return "E_INVALID_VARIANT";
    case Errc::not_involution: return "E_NOT_INVOLUTION";
    case Errc::not_hyperbolic: return "E_NOT_HYPERBOLIC";
    case Errc::not_two_elementary: return "E_NOT_TWO_ELEMENTARY";
    case Errc::parity: return "E_PARITY";
    case Errc::not_negative_definite: return "E_NOT_NEGATIVE_DEFINITE";
    case Errc::degenerate_functional: return "E_DEGENERATE_FUNCTIONAL";
    case Errc::not_simply_laced: return "E_NOT_SIMPLY_LACED";
    case Errc::not_ade: return "E_NOT_ADE";
    case Errc::type_mismatch: return "E_TYPE_MISMATCH";
    case Errc::not_signed_permutation: return "E_NOT_SIGNED_PERMUTATION";
    case Errc::orbit_overlap: return "E_ORBIT_OVERLAP";
    case Errc::not_admissible: return "E_NOT_ADMISSIBLE";
    case Errc::resource_limit: return "E_RESOURCE_LIMIT";
    case Errc::bad_input: return "E_BAD_INPUT";
    }
    return "E_UNKNOWN";
}

} // namespace k3inv
