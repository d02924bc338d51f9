#include "cp2b/mcg_action.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cp2b {

ActionMatrix::ActionMatrix() : m_{1, 0, 0, 1} {}

ActionMatrix::ActionMatrix(Int a, Int b, Int c, Int d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Int ActionMatrix::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ActionMatrix ActionMatrix::operator*(const ActionMatrix& rhs) const {
    return ActionMatrix(m_[0] * rhs.m_[0] + m_[1] * rhs.m_[2],
                        m_[0] * rhs.m_[1] + m_[1] * rhs.m_[3],
                        m_[2] * rhs.m_[0] + m_[3] * rhs.m_[2],
                        m_[2] * rhs.m_[1] + m_[3] * rhs.m_[3]);
}

ActionMatrix ActionMatrix::inverse() const {
    Int d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("ActionMatrix: not unimodular");
    return ActionMatrix(d * m_[3], d * -m_[1], d * -m_[2], d * m_[0]);
}

int ActionMatrix::order(int bound) const {
    ActionMatrix id;
    ActionMatrix acc = *this;
    for (int n = 1; n <= bound; ++n) {
        if (acc == id) return n;
        acc = acc * (*this);
    }
    return 0;
}

bool ActionMatrix::operator<(const ActionMatrix& rhs) const {
    return std::lexicographical_compare(m_.begin(), m_.end(), rhs.m_.begin(), rhs.m_.end());
}

std::string ActionMatrix::to_string() const {
    std::ostringstream os;
    os << "[[" << m_[0] << ", " << m_[1] << "], [" << m_[2] << ", " << m_[3] << "]]";
    return os.str();
}

ActionMatrix conjugation_action(long long k) { return ActionMatrix(-1, Int(-k), 0, 1); }

ActionMatrix factor_swap_action() { return ActionMatrix(0, 1, 1, 0); }

std::string to_string(QuotientTag tag) { return tag == QuotientTag::S3 ? "S3" : "Z2"; }

namespace {

bool admissible_in(const Ring& ring, const BundleParams& p, const ActionMatrix& m) {
    Element s = ring.generator(0);
    Element t = ring.generator(1);
    Element fs = m.at(0, 0) * s + m.at(1, 0) * t;
    Element ft = m.at(0, 1) * s + m.at(1, 1) * t;

    // ring map: both defining relations must still vanish
    if (!(fs * fs * fs).is_zero()) return false;
    Element relation = ft * ft - Int(p.k) * (ft * fs) + Int(p.l) * (fs * fs);
    if (!relation.is_zero()) return false;

    // orientation: <f*(s^2 t)> = <s^2 t> = 1
    if (evaluate(fs * fs * ft) != 1) return false;

    // p1 = (k^2-4l+3) s^2 must be fixed (vacuous at k^2-4l = -3)
    Int c = Int(p.k) * p.k - 4 * Int(p.l) + 3;
    Element diff = c * (fs * fs - s * s);
    return diff.is_zero();
}

}  // namespace

bool is_admissible(const BundleParams& p, const ActionMatrix& m) {
    Int d = m.det();
    if (d != 1 && d != -1)
        throw std::invalid_argument("is_admissible: matrix must have det +-1");
    return admissible_in(make_pn_ring(p.k, p.l), p, m);
}

namespace {

AutomorphismSet sorted_set(std::vector<ActionMatrix> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_group(const AutomorphismSet& set, const BundleParams& p) {
    Ring ring = make_pn_ring(p.k, p.l);
    auto contains = [&](const ActionMatrix& m) {
        return std::binary_search(set.begin(), set.end(), m);
    };
    for (const ActionMatrix& a : set) {
        if (!admissible_in(ring, p, a))
            throw std::logic_error("rep_image: inadmissible matrix " + a.to_string());
        if (!contains(a.inverse()))
            throw std::logic_error("rep_image: set not closed under inverses");
        for (const ActionMatrix& b : set)
            if (!contains(a * b))
                throw std::logic_error("rep_image: set not closed under products");
    }
}

}  // namespace

AutomorphismSet rep_image(const BundleParams& p) {
    long long r = p.k * p.k - 4 * p.l;
    std::vector<ActionMatrix> out;
    if (r != -3) {
        out = {ActionMatrix(), conjugation_action(p.k)};
    } else {
        // k^2 = 4l - 3 forces k odd; t -> t - ((k-1)/2) s carries the
        // presentation to (1,1), where the image is generated by X_1 and H.
        Int mshift((p.k - 1) / 2);
        ActionMatrix change(1, -mshift, 0, 1);
        ActionMatrix change_inv(1, mshift, 0, 1);
        ActionMatrix x1 = conjugation_action(1);
        ActionMatrix h = factor_swap_action();
        for (const ActionMatrix& m :
             {ActionMatrix(), x1, h, h * x1, x1 * h, h * x1 * h})
            out.push_back(change * m * change_inv);
    }
    AutomorphismSet set = sorted_set(std::move(out));
    check_group(set, p);
    return set;
}

AutomorphismSet brute_force_automorphisms(const BundleParams& p, long long bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_automorphisms: bound must be >= 1");
    Ring ring = make_pn_ring(p.k, p.l);
    std::vector<ActionMatrix> out;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d) {
                    long long dt = a * d - b * c;
                    if (dt != 1 && dt != -1) continue;
                    ActionMatrix m{Int(a), Int(b), Int(c), Int(d)};
                    if (admissible_in(ring, p, m)) out.push_back(std::move(m));
                }
    return sorted_set(std::move(out));
}

ExtensionDescriptor mcg_extension(const RInvariant& r) {
    ExtensionDescriptor out;
    out.tag = r.value() == -3 ? QuotientTag::S3 : QuotientTag::Z2;
    out.quotient_matrices = rep_image(params_for_r(r));
    bool six = out.quotient_matrices.size() == 6;
    if (six != (out.tag == QuotientTag::S3))
        throw std::logic_error("mcg_extension: quotient tag disagrees with matrix count");
    if (euclid_mod(r.value(), 8) == 5)
        out.torelli = torelli_group((r.value() - 5) / 8);
    return out;
}

}  // namespace cp2b
