#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeq/qrat.hpp"

namespace heckeq {

/// Cell (row, col) of a Young diagram, 1-based. Its content is col - row and
/// its q-content is q^{2(col-row)}.
struct Cell {
    int row = 0;
    int col = 0;

    int content() const { return col - row; }
    friend bool operator==(const Cell& a, const Cell& b) = default;
};

class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// Parses "2,1".
    static Partition parse(const std::string& text);

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Cell& c) const {
        return c.row >= 1 && c.row <= rows() && c.col >= 1 && c.col <= parts_[c.row - 1];
    }

    Partition conjugate() const {
        std::vector<int> conj;
        for (int j = 1; rows() > 0 && j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            conj.push_back(cnt);
        }
        return Partition(std::move(conj));
    }

    /// Cells whose union with the diagram is again a diagram, top to bottom.
    std::vector<Cell> addable_cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= rows() + 1; ++i) {
            const int len = part(i);
            if (i == 1 || len < part(i - 1)) out.push_back(Cell{i, len + 1});
        }
        return out;
    }

    std::vector<Cell> removable_cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= rows(); ++i)
            if (parts_[i - 1] > part(i + 1)) out.push_back(Cell{i, parts_[i - 1]});
        return out;
    }

    Partition with_cell(const Cell& c) const {
        std::vector<int> p = parts_;
        if (c.row == rows() + 1) {
            if (c.col != 1) throw std::invalid_argument("Partition: cell not addable");
            p.push_back(1);
        } else {
            if (!(c.row >= 1 && c.row <= rows() && c.col == parts_[c.row - 1] + 1))
                throw std::invalid_argument("Partition: cell not addable");
            ++p[c.row - 1];
        }
        return Partition(std::move(p));
    }

    Partition without_cell(const Cell& c) const {
        std::vector<int> p = parts_;
        if (!(c.row >= 1 && c.row <= rows() && c.col == parts_[c.row - 1]))
            throw std::invalid_argument("Partition: cell not removable");
        if (--p[c.row - 1] == 0) p.pop_back();
        return Partition(std::move(p));
    }

    int hook(const Cell& c) const {
        if (!contains(c)) throw std::invalid_argument("Partition: cell outside diagram");
        return parts_[c.row - 1] + conjugate().part(c.col) - c.row - c.col + 1;
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back(Cell{i, j});
        return out;
    }

    /// Hook lengths of all cells, sorted descending.
    std::vector<int> hooks() const {
        const Partition conj = conjugate();
        std::vector<int> out;
        for (int i = 1; i <= rows(); ++i)
            for (int j = 1; j <= parts_[i - 1]; ++j)
                out.push_back(parts_[i - 1] + conj.part(j) - i - j + 1);
        std::sort(out.rbegin(), out.rend());
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    auto operator<=>(const Partition& b) const = default;

  private:
    std::vector<int> parts_;
};

/// b(lambda) = sum_i lambda_i (lambda_i - 1).
inline long b_lambda(const Partition& p) {
    long b = 0;
    for (int part : p.parts()) b += static_cast<long>(part) * (part - 1);
    return b;
}

class StandardTableau {
  public:
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> parts;
        int n = 0;
        for (const auto& r : rows_) {
            if (r.empty()) throw std::invalid_argument("StandardTableau: empty row");
            parts.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(parts);
        std::vector<bool> seen(n, false);
        for (const auto& r : rows_)
            for (int v : r) {
                if (v < 1 || v > n || seen[v - 1])
                    throw std::invalid_argument("StandardTableau: entries must be 1..n, once each");
                seen[v - 1] = true;
            }
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j + 1 < rows_[i].size() && rows_[i][j] >= rows_[i][j + 1])
                    throw std::invalid_argument("StandardTableau: rows must increase");
                if (i + 1 < rows_.size() && j < rows_[i + 1].size() &&
                    rows_[i][j] >= rows_[i + 1][j])
                    throw std::invalid_argument("StandardTableau: columns must increase");
            }
    }

    /// Parses "1 2 / 3".
    static StandardTableau parse(const std::string& text);

    int size() const { return shape_.size(); }
    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Cell cell_of(int k) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i][j] == k) return Cell{static_cast<int>(i + 1), static_cast<int>(j + 1)};
        throw std::invalid_argument("StandardTableau: entry not present");
    }

    int content_of(int k) const { return cell_of(k).content(); }

    /// c_k = col - row of the cell holding k, for k = 1..n.
    std::vector<int> content_sequence() const {
        std::vector<int> c(size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                c[rows_[i][j] - 1] = static_cast<int>(j) - static_cast<int>(i);
        return c;
    }

    /// Sub-tableau holding the entries 1..k.
    StandardTableau restricted(int k) const {
        if (k < 1 || k > size()) throw std::invalid_argument("StandardTableau: bad restriction");
        std::vector<std::vector<int>> rows;
        for (const auto& r : rows_) {
            std::vector<int> keep;
            for (int v : r)
                if (v <= k) keep.push_back(v);
            if (!keep.empty()) rows.push_back(std::move(keep));
        }
        return StandardTableau(std::move(rows));
    }

    StandardTableau with_entry(const Cell& c) const {
        std::vector<std::vector<int>> rows = rows_;
        const int entry = size() + 1;
        if (c.row == static_cast<int>(rows.size()) + 1)
            rows.push_back({entry});
        else
            rows[c.row - 1].push_back(entry);
        return StandardTableau(std::move(rows));
    }

    /// Row-reading word (rows concatenated top to bottom); the enumeration is
    /// sorted by it.
    std::vector<int> row_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += " / ";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ' ';
                s += std::to_string(rows_[i][j]);
            }
        }
        return s;
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.row_word() < b.row_word();
    }

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

inline Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            parts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: cannot parse '" + token + "'");
        }
    }
    if (parts.empty()) throw std::invalid_argument("Partition: empty text");
    return Partition(std::move(parts));
}

inline StandardTableau StandardTableau::parse(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "/") {
            rows.emplace_back();
        } else {
            try {
                rows.back().push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("StandardTableau: cannot parse '" + token + "'");
            }
        }
    }
    return StandardTableau(std::move(rows));
}

/// All partitions of n in descending lexicographic order, (n) first.
inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All standard tableaux of the given shape, sorted by row-reading word.
inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    if (shape.size() == 0) return out;
    auto rec = [&](auto&& self, const StandardTableau& t) -> void {
        if (t.size() == shape.size()) {
            out.push_back(t);
            return;
        }
        for (const Cell& c : t.shape().addable_cells()) {
            const Partition grown = t.shape().with_cell(c);
            // stay inside the target shape
            if (grown.rows() <= shape.rows() && grown.part(c.row) <= shape.part(c.row))
                self(self, t.with_entry(c));
        }
    };
    rec(rec, StandardTableau(std::vector<std::vector<int>>{{1}}));
    std::sort(out.begin(), out.end());
    return out;
}

/// All standard tableaux with n cells, grouped by partition in enumeration
/// order.
inline std::vector<StandardTableau> all_syt(int n) {
    std::vector<StandardTableau> out;
    for (const Partition& p : enumerate_partitions(n))
        for (StandardTableau& t : enumerate_syt(p)) out.push_back(std::move(t));
    return out;
}

/// Normalization factor f(lambda) = prod over cells of q^{content}/[hook]_q.
inline QRat normalization_factor(const Partition& shape) {
    QRat f(1);
    for (const Cell& c : shape.cells())
        f *= QRat::q_power(c.content()) / qint(shape.hook(c));
    return f;
}

/// The same factor in hook-product form:
/// q^{b(lambda)} (1-q^2)^n prod over cells (1-q^{2 hook})^{-1}.
inline QRat normalization_factor_hook_form(const Partition& shape) {
    QPoly one_minus_q2;
    one_minus_q2.set(0, BigRational(1));
    one_minus_q2.set(2, BigRational(-1));
    QRat f = QRat::q_power(static_cast<int>(b_lambda(shape)));
    for (int i = 0; i < shape.size(); ++i) f *= QRat(one_minus_q2);
    for (int h : shape.hooks()) {
        QPoly d;
        d.set(0, BigRational(1));
        d.set(2 * h, BigRational(-1));
        f /= QRat(d);
    }
    return f;
}

/// prod of the hook lengths, as an integer.
inline BigInt hook_product(const Partition& shape) {
    BigInt p(1);
    for (int h : shape.hooks()) p *= h;
    return p;
}

} // namespace heckeq
