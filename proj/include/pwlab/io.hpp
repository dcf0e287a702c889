#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pwlab/gf2.hpp"

namespace pwlab {

/// Dense text format: "m n" header, then m lines of space-separated 0/1.
inline BinaryMatrix parse_dense(std::istream& in) {
    std::size_t m = 0, n = 0;
    if (!(in >> m >> n)) throw ParseError("dense: bad header");
    BinaryMatrix h(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            int v;
            if (!(in >> v) || (v != 0 && v != 1)) throw ParseError("dense: expected 0/1 entry");
            if (v) h.set(r, c, true);
        }
    return h;
}

inline void emit_dense(std::ostream& out, const BinaryMatrix& h) {
    out << h.n_rows() << " " << h.n_cols() << "\n";
    for (std::size_t r = 0; r < h.n_rows(); ++r) {
        for (std::size_t c = 0; c < h.n_cols(); ++c)
            out << (c ? " " : "") << (h.get(r, c) ? 1 : 0);
        out << "\n";
    }
}

/// Standard alist format: "n m" header (variables then checks), max degrees,
/// per-column and per-row degree lists, then 1-based adjacency lists padded
/// with zeros to the maximum degree.
inline BinaryMatrix parse_alist(std::istream& in) {
    std::size_t n = 0, m = 0, dvmax = 0, dcmax = 0;
    if (!(in >> n >> m >> dvmax >> dcmax)) throw ParseError("alist: bad header");
    std::vector<std::size_t> dv(n), dc(m);
    for (auto& d : dv)
        if (!(in >> d) || d > m) throw ParseError("alist: bad column degree");
    for (auto& d : dc)
        if (!(in >> d) || d > n) throw ParseError("alist: bad row degree");

    BinaryMatrix h(m, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < dvmax; ++e) {
            long idx;
            if (!(in >> idx)) throw ParseError("alist: truncated column list");
            if (idx == 0) {
                if (e < dv[c]) throw ParseError("alist: zero inside column list");
                continue;
            }
            if (idx < 1 || static_cast<std::size_t>(idx) > m || e >= dv[c])
                throw ParseError("alist: column index out of range");
            h.set(static_cast<std::size_t>(idx) - 1, c, true);
        }
    // the row lists are redundant; parse and cross-check
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t e = 0; e < dcmax; ++e) {
            long idx;
            if (!(in >> idx)) throw ParseError("alist: truncated row list");
            if (idx == 0) {
                if (e < dc[r]) throw ParseError("alist: zero inside row list");
                continue;
            }
            if (idx < 1 || static_cast<std::size_t>(idx) > n || e >= dc[r])
                throw ParseError("alist: row index out of range");
            if (!h.get(r, static_cast<std::size_t>(idx) - 1))
                throw ParseError("alist: row list disagrees with column list");
        }
    for (std::size_t r = 0; r < m; ++r)
        if (h.row_weight(r) != dc[r]) throw ParseError("alist: row degree mismatch");
    return h;
}

inline void emit_alist(std::ostream& out, const BinaryMatrix& h) {
    std::size_t m = h.n_rows(), n = h.n_cols();
    std::size_t dvmax = 0, dcmax = 0;
    for (std::size_t c = 0; c < n; ++c) dvmax = std::max(dvmax, h.col_weight(c));
    for (std::size_t r = 0; r < m; ++r) dcmax = std::max(dcmax, h.row_weight(r));
    out << n << " " << m << "\n" << dvmax << " " << dcmax << "\n";
    for (std::size_t c = 0; c < n; ++c) out << (c ? " " : "") << h.col_weight(c);
    out << "\n";
    for (std::size_t r = 0; r < m; ++r) out << (r ? " " : "") << h.row_weight(r);
    out << "\n";
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t written = 0;
        bool first = true;
        for (std::size_t r = 0; r < m; ++r)
            if (h.get(r, c)) {
                out << (first ? "" : " ") << r + 1;
                first = false;
                ++written;
            }
        for (; written < dvmax; ++written) {
            out << (first ? "" : " ") << 0;
            first = false;
        }
        out << "\n";
    }
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t written = 0;
        bool first = true;
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) {
                out << (first ? "" : " ") << c + 1;
                first = false;
                ++written;
            }
        for (; written < dcmax; ++written) {
            out << (first ? "" : " ") << 0;
            first = false;
        }
        out << "\n";
    }
}

enum class MatrixFormat { Dense, Alist };

/// Sniff the format: an alist file's first two lines hold exactly two
/// integers each and line three is a degree list; dense files put the row
/// data right after the header. Falls back on the extension when ambiguous.
inline BinaryMatrix parse_matrix_auto(const std::string& text, const std::string& path_hint = "") {
    if (path_hint.size() >= 6 && path_hint.substr(path_hint.size() - 6) == ".alist") {
        std::istringstream in(text);
        return parse_alist(in);
    }
    {
        std::istringstream in(text);
        try {
            return parse_dense(in);
        } catch (const ParseError&) {
        }
    }
    std::istringstream in(text);
    return parse_alist(in);
}

}  // namespace pwlab
