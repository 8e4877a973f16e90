#include "h2k/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace h2k {

namespace {

[[noreturn]] void syntax_error(size_t offset, const std::string& what) {
    throw SyntaxError(what + " at byte " + std::to_string(offset));
}

}  // namespace

PDCode parse_pd(const std::string& text) {
    PDCode pd;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        if (i >= n || text[i] != c)
            syntax_error(i, std::string("expected '") + c + "'");
        ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            syntax_error(start, "expected an integer");
        try {
            return std::stoi(text.substr(start, i - start));
        } catch (const std::exception&) {
            syntax_error(start, "integer out of range");
        }
    };

    skip_ws();
    if (i >= n) syntax_error(i, "empty PD code");
    while (i < n) {
        if (text[i] != 'X') syntax_error(i, "expected term 'X(a,b,c,d)'");
        ++i;
        skip_ws();
        expect('(');
        std::array<int, 4> q{};
        for (int s = 0; s < 4; ++s) {
            q[s] = read_int();
            skip_ws();
            if (s < 3) expect(',');
        }
        expect(')');
        pd.crossings.push_back(q);
        skip_ws();
    }
    pd.n = static_cast<int>(pd.crossings.size());

    std::map<int, int> count;
    for (const auto& q : pd.crossings)
        for (int e : q) ++count[e];
    for (const auto& [label, c] : count) {
        if (label < 1 || label > 2 * pd.n)
            throw LabelError("edge label " + std::to_string(label) + " outside 1.." +
                             std::to_string(2 * pd.n));
        if (c != 2)
            throw LabelError("edge label " + std::to_string(label) + " appears " +
                             std::to_string(c) + " times, expected 2");
    }
    if (static_cast<int>(count.size()) != 2 * pd.n)
        throw LabelError("expected " + std::to_string(2 * pd.n) + " distinct edge labels");
    return pd;
}

namespace {

inline int sigma(int h) { return (h & ~3) | ((h + 1) & 3); }

// alpha[h] = the other end of the edge at half-edge h; also records the two
// half-edges of each label in text order.
struct EdgeEnds {
    std::vector<int> alpha;                    // size 4n
    std::vector<std::array<int, 2>> by_label;  // label-1 -> its two half-edges
};

EdgeEnds edge_ends(const PDCode& pd) {
    EdgeEnds ee;
    ee.alpha.assign(static_cast<size_t>(4) * pd.n, -1);
    ee.by_label.assign(static_cast<size_t>(2) * pd.n, {-1, -1});
    for (int c = 0; c < pd.n; ++c)
        for (int s = 0; s < 4; ++s) {
            int h = 4 * c + s;
            auto& ends = ee.by_label[pd.crossings[c][s] - 1];
            if (ends[0] < 0) ends[0] = h;
            else ends[1] = h;
        }
    for (const auto& ends : ee.by_label) {
        ee.alpha[ends[0]] = ends[1];
        ee.alpha[ends[1]] = ends[0];
    }
    return ee;
}

void require_connected(const PDCode& pd, const EdgeEnds& ee) {
    if (pd.n == 0) throw InconsistentDiagram("empty diagram has no faces");
    std::vector<char> seen(pd.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int d = ee.alpha[4 * c + s] / 4;
            if (!seen[d]) { seen[d] = 1; ++visited; stack.push_back(d); }
        }
    }
    if (visited != pd.n) throw InconsistentDiagram("diagram is disconnected");
}

}  // namespace

FaceSet faces(const PDCode& pd) {
    EdgeEnds ee = edge_ends(pd);
    require_connected(pd, ee);

    FaceSet fs;
    fs.n = pd.n;
    fs.quadrant_face.assign(pd.n, {-1, -1, -1, -1});
    fs.edge_faces.assign(static_cast<size_t>(2) * pd.n, {-1, -1});
    std::vector<int> face_of(static_cast<size_t>(4) * pd.n, -1);

    // The face in quadrant (c, q) is the orbit of half-edge (c, q+1) under
    // h -> sigma(alpha(h)); scanning quadrants in order fixes face ids.
    for (int c = 0; c < pd.n; ++c)
        for (int q = 0; q < 4; ++q) {
            int h0 = 4 * c + ((q + 1) & 3);
            if (face_of[h0] < 0) {
                int fid = fs.face_count();
                std::vector<std::pair<int, int>> boundary;
                int h = h0;
                do {
                    face_of[h] = fid;
                    int label = pd.crossings[h / 4][h & 3];
                    boundary.emplace_back(label, ee.by_label[label - 1][0] == h ? 0 : 1);
                    h = sigma(ee.alpha[h]);
                } while (h != h0);
                fs.faces.push_back(std::move(boundary));
            }
            fs.quadrant_face[c][q] = face_of[h0];
        }

    if (fs.face_count() != pd.n + 2)
        throw InconsistentDiagram("face count " + std::to_string(fs.face_count()) +
                                  " does not match a sphere diagram with " +
                                  std::to_string(pd.n) + " crossings");

    for (int e = 0; e < 2 * pd.n; ++e) {
        fs.edge_faces[e][0] = face_of[sigma(ee.by_label[e][0])];
        fs.edge_faces[e][1] = face_of[sigma(ee.by_label[e][1])];
    }
    return fs;
}

bool is_alternating(const PDCode& pd) {
    // Slots 0,2 are under ends, 1,3 over ends; alternation means every edge
    // connects one of each.
    EdgeEnds ee = edge_ends(pd);
    for (const auto& ends : ee.by_label)
        if ((ends[0] & 1) == (ends[1] & 1)) return false;
    return true;
}

bool is_reduced(const PDCode& pd, const FaceSet& fs) {
    (void)pd;
    for (const auto& qf : fs.quadrant_face)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (qf[a] == qf[b]) return false;
    return true;
}

std::vector<int> checkerboard(const PDCode& pd, const FaceSet& fs) {
    std::vector<int> color(fs.face_count(), -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e = 0; e < 2 * pd.n; ++e) {
            if (fs.edge_faces[e][0] != f && fs.edge_faces[e][1] != f) continue;
            int g = fs.edge_faces[e][0] == f ? fs.edge_faces[e][1] : fs.edge_faces[e][0];
            if (g == f) throw InconsistentDiagram("edge bounded by one face on both sides");
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                throw InconsistentDiagram("diagram is not checkerboard colorable");
            }
        }
    }
    for (int f = 0; f < fs.face_count(); ++f)
        if (color[f] < 0) throw InconsistentDiagram("face adjacency is disconnected");
    return color;
}

GoeritzResult goeritz_from_pd(const PDCode& pd, std::optional<int> f0_choice) {
    FaceSet fs = faces(pd);
    if (!is_alternating(pd)) throw NotAlternating("diagram is not alternating");
    if (!is_reduced(pd, fs)) throw NotReduced("diagram has a nugatory crossing");

    const int f0 = f0_choice.value_or(0);
    if (f0 < 0 || f0 >= fs.face_count())
        throw OutOfRange("f0 face index " + std::to_string(f0) + " outside 0.." +
                         std::to_string(fs.face_count() - 1));

    // The chosen face plays the unbounded region, so its class is black.
    std::vector<int> color = checkerboard(pd, fs);
    Coloring col;
    col.color = color;
    const int black = color[f0];
    for (int f = 0; f < fs.face_count(); ++f)
        if (color[f] == black) col.black_faces.push_back(f);
    col.deleted_index = static_cast<int>(
        std::find(col.black_faces.begin(), col.black_faces.end(), f0) - col.black_faces.begin());

    const int m = static_cast<int>(col.black_faces.size());
    std::vector<int> pos(fs.face_count(), -1);
    for (int i = 0; i < m; ++i) pos[col.black_faces[i]] = i;

    // Unsigned crossing counts; the full m x m matrix has zero row sums.
    std::vector<std::vector<Integer>> full(m, std::vector<Integer>(m, 0));
    for (const auto& qf : fs.quadrant_face) {
        int b1 = -1, b2 = -1;
        for (int q = 0; q < 4; ++q) {
            if (color[qf[q]] != black) continue;
            (b1 < 0 ? b1 : b2) = pos[qf[q]];
        }
        if (b1 < 0 || b2 < 0 || b1 == b2)
            throw InconsistentDiagram("crossing does not join two distinct black faces");
        full[b1][b2] -= 1;
        full[b2][b1] -= 1;
        full[b1][b1] += 1;
        full[b2][b2] += 1;
    }

    std::vector<std::vector<Integer>> rows;
    std::vector<int> row_faces;
    for (int i = 0; i < m; ++i) {
        if (col.black_faces[i] == f0) continue;
        std::vector<Integer> row;
        for (int j = 0; j < m; ++j) {
            if (col.black_faces[j] == f0) continue;
            row.push_back(full[i][j]);
        }
        rows.push_back(std::move(row));
        row_faces.push_back(col.black_faces[i]);
    }

    IntSymMatrix q(rows);
    GoeritzResult out;
    out.provenance = Provenance::pd_code;
    out.black_face_map = row_faces;
    out.f0_face = f0;
    if (is_positive_definite(q)) {
        out.Q = q;
        out.mirrored = false;
    } else if (is_positive_definite(q.negated())) {
        out.Q = q.negated();
        out.mirrored = true;
    } else {
        throw NoDefiniteColoring("no sign makes the Goeritz candidate positive definite");
    }
    out.determinant = determinant(out.Q);
    if (mpz_even_p(out.determinant.get_mpz_t()))
        throw EvenDeterminant("determinant " + out.determinant.get_str() +
                              " is even; the diagram is a link, not a knot");
    return out;
}

GoeritzResult goeritz_from_pretzel(long p, long q, long r) {
    if (p <= 0 || q <= 0 || r <= 0)
        throw InvalidArgument("pretzel parameters must be positive");
    int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (evens > 1)
        throw NotAKnot("pretzel(" + std::to_string(p) + "," + std::to_string(q) + "," +
                       std::to_string(r) + ") has " + std::to_string(evens) +
                       " even parameters and is a link");

    IntSymMatrix m(std::vector<std::vector<Integer>>{
        {Integer(p) + q, Integer(-q)},
        {Integer(-q), Integer(q) + r}});
    GoeritzResult out;
    out.provenance = Provenance::pretzel;
    out.pretzel_params = {{p, q, r}};
    if (!is_positive_definite(m))
        throw Indefinite("pretzel Goeritz matrix is not positive definite");
    out.Q = m;
    out.mirrored = false;
    out.determinant = determinant(m);
    if (mpz_even_p(out.determinant.get_mpz_t()))
        throw EvenDeterminant("pretzel determinant " + out.determinant.get_str() + " is even");
    return out;
}

GoeritzResult goeritz_from_matrix(const IntSymMatrix& raw) {
    GoeritzResult out;
    out.provenance = Provenance::raw_matrix;
    if (is_positive_definite(raw)) {
        out.Q = raw;
        out.mirrored = false;
    } else if (is_positive_definite(raw.negated())) {
        out.Q = raw.negated();
        out.mirrored = true;
    } else {
        throw Indefinite("neither the matrix nor its negation is positive definite");
    }
    out.determinant = determinant(out.Q);
    if (mpz_even_p(out.determinant.get_mpz_t()))
        throw EvenDeterminant("determinant " + out.determinant.get_str() +
                              " is even; knot determinants are odd");
    return out;
}

}  // namespace h2k
