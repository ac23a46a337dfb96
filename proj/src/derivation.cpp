#include "multider/derivation.hpp"

namespace multider {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::basis: return "basis";
        case Verdict::not_member: return "not_member";
        case Verdict::dependent: return "dependent";
        case Verdict::degree_mismatch: return "degree_mismatch";
    }
    return "unknown";
}

} // namespace multider
