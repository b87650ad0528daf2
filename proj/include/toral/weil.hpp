#pragma once

// Genus-one modular data: the Weil representation of SL(2,Z) on
// functions on the discriminant group. Implemented projectively; the
// anomaly sigma(K)/8 is exposed, not split off. Sign convention:
// S_{a,a'} ~ e^{-2 pi i b(a,a')}, so the (ST)^3 anomaly equals the
// Milgram phase +sigma(K)/8.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "toral/disc_group.hpp"
#include "toral/partition_value.hpp"

namespace toral {

struct CMatrix {
    std::size_t n = 0;
    std::vector<std::complex<double>> data;

    CMatrix() = default;
    explicit CMatrix(std::size_t size) : n(size), data(size * size) {}

    static CMatrix identity(std::size_t size) {
        CMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
        return m;
    }

    std::complex<double>& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
        return data[i * n + j];
    }

    CMatrix operator*(const CMatrix& o) const {
        CMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                std::complex<double> a = (*this)(i, k);
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    CMatrix operator*(std::complex<double> c) const {
        CMatrix r = *this;
        for (auto& x : r.data) x *= c;
        return r;
    }

    CMatrix dagger() const {
        CMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    std::complex<double> trace() const {
        std::complex<double> t = 0;
        for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs_diff(const CMatrix& o) const {
        double d = 0;
        for (std::size_t i = 0; i < data.size(); ++i)
            d = std::max(d, std::abs(data[i] - o.data[i]));
        return d;
    }
};

struct McgWord {
    enum class Letter { S, T, Tinv };
    std::vector<Letter> letters;

    // "S", "T", "t" (= T^{-1})
    static McgWord parse(const std::string& s) {
        McgWord w;
        for (char c : s) {
            switch (c) {
                case 'S': case 's': w.letters.push_back(Letter::S); break;
                case 'T': w.letters.push_back(Letter::T); break;
                case 't': w.letters.push_back(Letter::Tinv); break;
                case ' ': break;
                default:
                    throw InputError(std::string("McgWord: bad letter '") + c + "'");
            }
        }
        if (w.letters.empty()) throw InputError("McgWord: empty word");
        return w;
    }
};

class ModularData {
public:
    explicit ModularData(const EvenLattice& l) : group_(l) {
        const std::size_t n = group_.size();
        anomaly_ = RationalPhase(l.signature(), 8);
        s_ = CMatrix(n);
        t_ = CMatrix(n);
        const double norm = 1.0 / std::sqrt(static_cast<double>(group_.order()));
        std::vector<std::vector<Int>> elems(n);
        for (std::size_t i = 0; i < n; ++i) elems[i] = group_.element(i);
        for (std::size_t i = 0; i < n; ++i) {
            t_(i, i) = group_.q(elems[i]).unit();
            for (std::size_t j = 0; j < n; ++j)
                s_(i, j) = norm * (-group_.b(elems[i], elems[j])).unit();
        }
        check_relations();
    }

    const DiscGroup& group() const { return group_; }
    const CMatrix& s_matrix() const { return s_; }
    const CMatrix& t_matrix() const { return t_; }
    const RationalPhase& anomaly() const { return anomaly_; }

    // permutation matrix of charge conjugation a -> -a
    CMatrix conjugation_matrix() const {
        CMatrix c(group_.size());
        for (std::size_t i = 0; i < group_.size(); ++i) c(group_.neg_index(i), i) = 1.0;
        return c;
    }

private:
    void check_relations() const {
        const std::size_t n = group_.size();
        CMatrix id = CMatrix::identity(n);
        if ((s_ * s_.dagger()).max_abs_diff(id) > 1e-10)
            throw RelationViolation("ModularData: S matrix is not unitary");
        CMatrix c = conjugation_matrix();
        if ((s_ * s_).max_abs_diff(c) > 1e-10)
            throw RelationViolation("ModularData: S^2 is not charge conjugation");
        CMatrix st = s_ * t_;
        CMatrix st3 = st * st * st;
        if (st3.max_abs_diff(c * anomaly_.unit()) > 1e-9)
            throw RelationViolation(
                "ModularData: (ST)^3 does not match the Milgram anomaly phase");
    }

    DiscGroup group_;
    CMatrix s_, t_;
    RationalPhase anomaly_;
};

inline ModularData modular_data(const EvenLattice& l) { return ModularData(l); }

inline CMatrix rep_word(const ModularData& d, const McgWord& w) {
    const std::size_t n = d.group().size();
    CMatrix tinv(n);
    for (std::size_t i = 0; i < n; ++i) tinv(i, i) = std::conj(d.t_matrix()(i, i));
    CMatrix r = CMatrix::identity(n);
    for (McgWord::Letter l : w.letters) {
        switch (l) {
            case McgWord::Letter::S: r = r * d.s_matrix(); break;
            case McgWord::Letter::T: r = r * d.t_matrix(); break;
            case McgWord::Letter::Tinv: r = r * tinv; break;
        }
    }
    return r;
}

// Partition function of the mapping torus of the word, as a projective
// trace: the overall phase is defined only up to powers of the anomaly;
// the magnitude is well defined.
inline PartitionValue mapping_torus_trace(const ModularData& d, const McgWord& w) {
    PartitionValue v;
    v.amplitude = rep_word(d, w).trace();
    v.source_notes = "mapping torus trace; phase defined up to anomaly " + d.anomaly().str();
    return v;
}

} // namespace toral
