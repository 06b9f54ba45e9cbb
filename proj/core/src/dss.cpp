#include "maxseg/dss.hpp"

#include <algorithm>

namespace maxseg {

bool DssRecognizer::extend_front(LatticePoint next) {
    LatticeVector step = next - last_;
    if (l1_norm(step) != 1)
        throw std::invalid_argument("extend_front: point is not 4-adjacent to the endpoint");

    if (n_ == 1) {
        // Second point fixes the direction: travel along +(b, a).
        step1_ = step;
        line_ = {step.y, step.x, 0};
        line_.mu = line_.remainder(last_);
        u2_ = l2_ = next;
        last_ = next;
        n_ = 2;
        return true;
    }

    LatticeVector new_step2 = step2_;
    if (!(step == step1_ || step == step2_)) {
        if (step2_ == LatticeVector{0, 0} && !(step == -step1_))
            new_step2 = step;
        else
            return false;  // a third letter (or a reversal) fits no standard line
    }

    const Int w = line_.width();
    const Int r = line_.remainder(next);
    if (line_.mu <= r && r < line_.mu + w) {
        if (r == line_.mu) u2_ = next;
        if (r == line_.mu + w - 1) l2_ = next;
    } else if (r == line_.mu - 1) {
        // Weakly exterior on the upper side: the slope steepens to the
        // vector U1 -> next; `next` becomes the last upper leaning point
        // and the old last lower leaning point is the only lower one left.
        LatticeVector v = next - u1_;
        line_ = {v.y, v.x, 0};
        line_.mu = line_.remainder(next);
        u2_ = next;
        l1_ = l2_;
    } else if (r == line_.mu + w) {
        // Weakly exterior on the lower side, symmetric.
        LatticeVector v = next - l1_;
        line_ = {v.y, v.x, 0};
        line_.mu = line_.remainder(next) - line_.width() + 1;
        l2_ = next;
        u1_ = u2_;
    } else {
        return false;
    }
    step2_ = new_step2;
    last_ = next;
    ++n_;
    return true;
}

namespace {

// Largest absolute j in [i, i + limit - 1] with points i..j a DSS.
Int extend_front_max(const Contour& c, Int i, Int limit) {
    DssRecognizer rec(c.point(i));
    Int j = i;
    while (j - i + 1 < limit) {
        if (!c.closed() && j + 1 >= c.size()) break;
        if (!rec.extend_front(c.point(j + 1))) break;
        ++j;
    }
    return j;
}

// Smallest absolute i in [j - limit + 1, j] with points i..j a DSS.
Int extend_back_max(const Contour& c, Int j, Int limit) {
    DssRecognizer rec(c.point(j));
    Int i = j;
    while (j - i + 1 < limit) {
        if (!c.closed() && i - 1 < 0) break;
        if (!rec.extend_front(c.point(i - 1))) break;
        --i;
    }
    return i;
}

DssWitness forward_witness(const Contour& c, Int first, Int last) {
    DssRecognizer rec(c.point(first));
    for (Int k = first + 1; k <= last; ++k)
        if (!rec.extend_front(c.point(k)))
            throw std::logic_error("forward_witness: run is not a DSS");
    return {rec.line(), first, last, rec.u1(), rec.u2(), rec.l1(), rec.l2()};
}

}  // namespace

Int front(const Contour& c, Int i) {
    if (!c.closed() && (i < 0 || i >= c.size()))
        throw std::invalid_argument("front: index out of range on open contour");
    const Int n = c.size();
    Int j = extend_front_max(c, i, n);
    if (c.closed() && j - i + 1 == n)
        throw DegenerateContourError("front: whole closed contour is one DSS");
    return j;
}

Int back(const Contour& c, Int j) {
    if (!c.closed() && (j < 0 || j >= c.size()))
        throw std::invalid_argument("back: index out of range on open contour");
    const Int n = c.size();
    Int i = extend_back_max(c, j, n);
    if (c.closed() && j - i + 1 == n)
        throw DegenerateContourError("back: whole closed contour is one DSS");
    return i;
}

std::vector<MaximalSegment> maximal_segments(const Contour& c) {
    if (!c.closed()) throw std::invalid_argument("maximal_segments: contour must be closed");
    const Int n = c.size();
    if (n < 5) throw std::invalid_argument("maximal_segments: contour too small");

    // First maximal segment: [B(F(0)), F(0)].
    Int j = extend_front_max(c, 0, n);
    if (j + 1 == n) throw DegenerateContourError("maximal_segments: contour is one DSS");
    Int i = extend_back_max(c, j, n);
    const Int first_i = ((i % n) + n) % n;
    const Int first_len = j - i;

    std::vector<MaximalSegment> out;
    auto push = [&](Int fi, Int la) {
        DssWitness w = forward_witness(c, fi, la);
        // The raw forward witness always has the geometrically outward side
        // of a CCW contour on the max-remainder class (travel direction is
        // +(b,a), and the remainder gradient (a,-b) points right of it);
        // negate so the outward side is the upper class.
        w.line = w.line.negated();
        std::swap(w.u1, w.l1);
        std::swap(w.u2, w.l2);
        out.push_back({w});
    };
    push(((i % n) + n) % n, ((i % n) + n) % n + first_len);

    Int guard = 0;
    while (true) {
        if (++guard > n) throw std::logic_error("maximal_segments: enumeration did not close");
        Int i2 = extend_back_max(c, j + 1, n);
        if (j + 1 - i2 + 1 > n) throw std::logic_error("maximal_segments: back wrapped fully");
        Int j2 = extend_front_max(c, i2, n);
        Int i2m = ((i2 % n) + n) % n;
        if (i2m == first_i) {
            if (j2 - i2 != first_len)
                throw std::logic_error("maximal_segments: inconsistent wrap segment");
            break;
        }
        push(i2m, i2m + (j2 - i2));
        i = i2;
        j = j2;
    }

    std::sort(out.begin(), out.end(),
              [](const MaximalSegment& a, const MaximalSegment& b) { return a.first() < b.first(); });
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        if (!(out[k].first() < out[k + 1].first() && out[k].last() < out[k + 1].last()))
            throw std::logic_error("maximal_segments: nesting detected");
    }
    return out;
}

FrontBackTable front_back_table(const Contour& c, const std::vector<MaximalSegment>& segments) {
    const Int n = c.size();
    FrontBackTable t;
    t.dist_front.assign(static_cast<std::size_t>(n), -1);
    t.dist_back.assign(static_cast<std::size_t>(n), -1);
    for (const auto& s : segments) {
        for (Int idx = s.first(); idx <= s.last(); ++idx) {
            std::size_t i = static_cast<std::size_t>(((idx % n) + n) % n);
            t.dist_front[i] = std::max(t.dist_front[i], s.last() - idx);
            t.dist_back[i] = std::max(t.dist_back[i], idx - s.first());
        }
    }
    for (Int i = 0; i < n; ++i)
        if (t.dist_front[static_cast<std::size_t>(i)] < 0)
            throw std::logic_error("front_back_table: uncovered contour index");
    return t;
}

}  // namespace maxseg
