#include "leafpower/simplex.hpp"

#include <map>
#include <stdexcept>

#include "leafpower/graph.hpp"  // InputError

namespace leafpower {

namespace {

// Dense simplex tableau over exact rationals, Bland's rule throughout
// (smallest eligible column enters; ties on the ratio test break toward
// the smallest basic variable), which guarantees termination.
class Tableau {
public:
    Tableau(int cols) : cols_(cols) {}

    void add_row(std::vector<Rat> coeffs, Rat rhs, int basic) {
        coeffs.push_back(std::move(rhs));
        rows_.push_back(std::move(coeffs));
        basis_.push_back(basic);
    }

    int row_count() const { return int(rows_.size()); }
    int basic_of(int r) const { return basis_[r]; }
    const Rat& coeff(int r, int c) const { return rows_[r][c]; }
    const Rat& rhs(int r) const { return rows_[r][cols_]; }

    void set_objective(std::vector<Rat> coeffs, Rat constant) {
        obj_ = std::move(coeffs);
        obj_const_ = std::move(constant);
        // Reduce the objective against the current basis.
        for (int r = 0; r < row_count(); ++r) reduce_objective(r);
    }

    const Rat& objective_value() const { return obj_const_; }

    void pivot(int r, int c) {
        Rat inv = 1 / rows_[r][c];
        for (auto& v : rows_[r]) v *= inv;
        for (int i = 0; i < row_count(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rat m = rows_[i][c];
            for (int j = 0; j <= cols_; ++j) rows_[i][j] -= m * rows_[r][j];
        }
        basis_[r] = c;
        reduce_objective(r);
    }

    // Runs to optimality; the systems we build are always bounded, so a
    // missing leaving row means the construction itself is wrong.
    void maximize() {
        for (;;) {
            int enter = -1;
            for (int c = 0; c < cols_; ++c)
                if (obj_[c] > 0) {
                    enter = c;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (int r = 0; r < row_count(); ++r) {
                if (rows_[r][enter] <= 0) continue;
                Rat ratio = rows_[r][cols_] / rows_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("unbounded feasibility tableau");
            pivot(leave, enter);
        }
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(cols_, Rat(0));
        for (int r = 0; r < row_count(); ++r)
            if (basis_[r] < cols_) x[basis_[r]] = rows_[r][cols_];
        return x;
    }

    void drop_row(int r) {
        rows_.erase(rows_.begin() + r);
        basis_.erase(basis_.begin() + r);
    }

    void shrink_columns(int new_cols) {
        for (auto& row : rows_) row.erase(row.begin() + new_cols, row.end() - 1);
        obj_.resize(new_cols);
        cols_ = new_cols;
    }

private:
    // Substitutes the basic variable of row r out of the objective.
    void reduce_objective(int r) {
        if (obj_.empty()) return;
        int b = basis_[r];
        if (obj_[b] == 0) return;
        Rat m = obj_[b];
        for (int j = 0; j < cols_; ++j) obj_[j] -= m * rows_[r][j];
        obj_const_ += m * rows_[r][cols_];
    }

    int cols_;
    std::vector<std::vector<Rat>> rows_;  // each row: cols_ coeffs then rhs
    std::vector<int> basis_;
    std::vector<Rat> obj_;
    Rat obj_const_;
};

}  // namespace

FeasibilitySystem::FeasibilitySystem(int vars) : vars_(vars) {
    if (vars < 0) throw InputError("negative variable count");
}

void FeasibilitySystem::push(const Terms& terms, const Rat& rhs, int sign, bool with_margin) {
    std::map<int, Rat> acc;
    for (const auto& [v, c] : terms) {
        if (v < 0 || v >= vars_) throw InputError("constraint names a missing variable");
        acc[v] += sign * c;
    }
    Row row;
    for (auto& [v, c] : acc)
        if (c != 0) row.terms.emplace_back(v, c);
    row.rhs = sign * rhs;
    row.with_margin = with_margin;
    rows_.push_back(std::move(row));
}

void FeasibilitySystem::add_le(const Terms& terms, const Rat& rhs) { push(terms, rhs, 1, false); }
void FeasibilitySystem::add_ge(const Terms& terms, const Rat& rhs) { push(terms, rhs, -1, false); }
void FeasibilitySystem::add_eq(const Terms& terms, const Rat& rhs) {
    push(terms, rhs, 1, false);
    push(terms, rhs, -1, false);
}
void FeasibilitySystem::add_lt(const Terms& terms, const Rat& rhs) { push(terms, rhs, 1, true); }
void FeasibilitySystem::add_gt(const Terms& terms, const Rat& rhs) { push(terms, rhs, -1, true); }

std::optional<std::vector<Rat>> FeasibilitySystem::solve() const {
    // Columns: each free variable split into positive and negative parts,
    // then the margin, then one slack per row (including the margin cap).
    int split = 2 * vars_;
    int margin = split;
    int nrows = int(rows_.size()) + 1;  // + margin cap
    int slack0 = margin + 1;
    int real_cols = slack0 + nrows;

    std::vector<std::vector<Rat>> mat;
    std::vector<Rat> rhs;
    for (const auto& row : rows_) {
        std::vector<Rat> r(real_cols, Rat(0));
        for (const auto& [v, c] : row.terms) {
            r[2 * v] = c;
            r[2 * v + 1] = -c;
        }
        if (row.with_margin) r[margin] = 1;
        r[slack0 + int(mat.size())] = 1;
        mat.push_back(std::move(r));
        rhs.push_back(row.rhs);
    }
    {
        std::vector<Rat> r(real_cols, Rat(0));  // margin <= 1
        r[margin] = 1;
        r[slack0 + int(mat.size())] = 1;
        mat.push_back(std::move(r));
        rhs.push_back(Rat(1));
    }

    // Rows with a negative right side get an artificial variable instead
    // of their slack as the starting basic variable.
    std::vector<int> artificial_rows;
    for (int i = 0; i < nrows; ++i)
        if (rhs[i] < 0) artificial_rows.push_back(i);
    int cols = real_cols + int(artificial_rows.size());

    Tableau tab(cols);
    {
        int next_art = real_cols;
        std::vector<int> art_of(nrows, -1);
        for (int i : artificial_rows) art_of[i] = next_art++;
        for (int i = 0; i < nrows; ++i) {
            std::vector<Rat> r = mat[i];
            r.resize(cols, Rat(0));
            Rat b = rhs[i];
            int basic;
            if (art_of[i] >= 0) {
                for (auto& v : r) v = -v;
                b = -b;
                r[art_of[i]] = 1;
                basic = art_of[i];
            } else {
                basic = slack0 + i;
            }
            tab.add_row(std::move(r), std::move(b), basic);
        }
    }

    if (!artificial_rows.empty()) {
        // Phase one: maximize minus the sum of artificials.
        std::vector<Rat> obj(cols, Rat(0));
        for (int c = real_cols; c < cols; ++c) obj[c] = -1;
        tab.set_objective(std::move(obj), Rat(0));
        tab.maximize();
        if (tab.objective_value() < 0) return std::nullopt;
        // Pivot any artificial still basic (at zero) out, or drop its row
        // when it reduced to nothing.
        for (int r = tab.row_count() - 1; r >= 0; --r) {
            if (tab.basic_of(r) < real_cols) continue;
            int c = 0;
            while (c < real_cols && tab.coeff(r, c) == 0) ++c;
            if (c < real_cols)
                tab.pivot(r, c);
            else
                tab.drop_row(r);
        }
        tab.shrink_columns(real_cols);
    }

    // Phase two: push the margin up.
    std::vector<Rat> obj(real_cols, Rat(0));
    obj[margin] = 1;
    tab.set_objective(std::move(obj), Rat(0));
    tab.maximize();
    if (tab.objective_value() <= 0) return std::nullopt;

    std::vector<Rat> packed = tab.solution();
    std::vector<Rat> out(vars_);
    for (int v = 0; v < vars_; ++v) out[v] = packed[2 * v] - packed[2 * v + 1];
    return out;
}

}  // namespace leafpower
