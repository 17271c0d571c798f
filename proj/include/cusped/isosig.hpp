#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusped/moves.hpp"
#include "cusped/triangulation.hpp"

namespace cusped {

struct IsosigError : std::runtime_error {
    size_t position;
    IsosigError(size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct LabelledTriangulation {
    Triangulation tri;               // the relabelled triangulation
    std::vector<int> tet_order;      // new index -> original tetrahedron
    std::vector<Perm4> corner_perm;  // original tet -> (original labels -> new labels)
    std::string signature;
};

// Lexicographically least signature over all start choices; constant on isomorphism classes.
std::string isosig_encode(const Triangulation& t);
LabelledTriangulation canonical_labelling(const Triangulation& t);

// Inverse: reconstructs the canonically labelled triangulation.
Triangulation isosig_decode(const std::string& sig);

struct ProofStep {
    std::string isosig;
    int location = 0;
    std::optional<MoveKind> move;  // empty on the final step
};

struct SimplificationProof {
    std::vector<ProofStep> steps;

    std::string serialize() const;
    static SimplificationProof deserialize(const std::string& text);
};

struct ProofCheck {
    bool ok = false;
    int failed_step = -1;
    std::string message;
};

ProofCheck verify_simplification_proof(const Triangulation& t0, const SimplificationProof& proof,
                                       const Triangulation& t1);

}  // namespace cusped
