#pragma once

// PD-code ingestion: parsing, face reconstruction on the sphere,
// alternating/reduced validation, checkerboard coloring and Goeritz matrix
// construction. Also the direct constructions for 3-strand pretzel
// parameters and raw matrices.
//
// Conventions (fixed):
//  - a crossing X(a,b,c,d) lists its edge ends counterclockwise starting at
//    the incoming under-strand, so slots 0,2 are the under-strand and slots
//    1,3 the over-strand;
//  - quadrant q of a crossing lies between slots q and q+1 (mod 4);
//  - faces are indexed in order of first discovery while scanning quadrants
//    in crossing-major order.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h2k/exactmat.hpp"

namespace h2k {

struct PDCode {
    int n = 0;                                  // crossing count
    std::vector<std::array<int, 4>> crossings;  // edge labels, 1..2n each twice
};

// Half-edges are encoded as 4*crossing + slot.
struct FaceSet {
    int n = 0;
    // Per face, the boundary as (edge label, side) pairs in walk order;
    // side distinguishes the two ends of an edge (0 = first occurrence in
    // the PD text, 1 = second).
    std::vector<std::vector<std::pair<int, int>>> faces;
    // Face id incident to each quadrant of each crossing.
    std::vector<std::array<int, 4>> quadrant_face;
    // The two faces on the sides of each edge (indexed by label - 1).
    std::vector<std::array<int, 2>> edge_faces;

    int face_count() const { return static_cast<int>(faces.size()); }
};

struct Coloring {
    std::vector<int> color;       // 0/1 per face; black is color[f0]
    std::vector<int> black_faces;  // ascending face ids of the black class
    int deleted_index = 0;         // position of f0 within black_faces
};

enum class Provenance { raw_matrix, pretzel, pd_code };

struct GoeritzResult {
    IntSymMatrix Q;          // positive definite
    Integer determinant;     // det(Q), odd and >= 1
    bool mirrored = false;   // true when the raw input had to be negated
    Provenance provenance = Provenance::raw_matrix;
    std::optional<std::array<long, 3>> pretzel_params;
    std::vector<int> black_face_map;  // row index -> face id (pd path only)
    std::optional<int> f0_face;       // deleted face id (pd path only)
};

// Parses whitespace-separated terms "X(a,b,c,d)". Throws SyntaxError with a
// byte offset for malformed text, LabelError when the labels are not
// exactly 1..2n each appearing twice.
PDCode parse_pd(const std::string& text);

// Face reconstruction; throws InconsistentDiagram when the code is
// disconnected or does not close up into a sphere (face count != n + 2).
FaceSet faces(const PDCode& pd);

// True iff every edge has one under end and one over end.
bool is_alternating(const PDCode& pd);

// True iff no crossing touches the same face in two of its quadrants.
bool is_reduced(const PDCode& pd, const FaceSet& fs);

// Proper two-coloring of the faces (color 0 contains face 0).
std::vector<int> checkerboard(const PDCode& pd, const FaceSet& fs);

// Goeritz matrix of a reduced alternating diagram. f0_choice selects the
// face that plays the unbounded region (default face 0); its color class
// becomes black, f0 is deleted, and the sign is fixed by positive
// definiteness.
GoeritzResult goeritz_from_pd(const PDCode& pd, std::optional<int> f0_choice = std::nullopt);

// Q = [[p+q, -q], [-q, q+r]] for the standard 3-strand pretzel diagram.
// Requires p, q, r positive with at most one even (NotAKnot otherwise).
GoeritzResult goeritz_from_pretzel(long p, long q, long r);

// Wraps a user-supplied symmetric matrix: as-is when positive definite,
// negated (mirrored = true) when its negation is, Indefinite otherwise;
// the determinant must be odd. The k == 0 matrix represents the unknot.
GoeritzResult goeritz_from_matrix(const IntSymMatrix& raw);

}  // namespace h2k
