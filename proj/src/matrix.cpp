#include "mpk/matrix.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mpk {

namespace {

bool is_zero(const Poly& p) { return p.is_zero(); }
bool is_zero(const Int& x) { return x == 0; }

template <class A, class B>
PolyMatrix mul_generic(const A& a, const B& b, const RingPtr& ring) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix c(a.rows(), b.cols(), Poly(ring));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto& bkj = b(k, j);
                if (is_zero(bkj)) continue;
                c(i, j) += aik * bkj;
            }
        }
    return c;
}

enum class Shape { Upper, Lower, None };

template <class T>
Shape shape_of(const Matrix<T>& m) {
    bool upper = true, lower = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (is_zero(m(i, j))) continue;
            if (j < i) upper = false;
            if (j > i) lower = false;
        }
    if (upper) return Shape::Upper;
    if (lower) return Shape::Lower;
    return Shape::None;
}

bool is_unit_one(const Poly& p) { return p.is_one(); }
bool is_unit_one(const Int& x) { return x == 1; }

// Back substitution for unit upper triangular m: inverse X with m X = I.
template <class T>
Matrix<T> upper_inverse(const Matrix<T>& m, const T& zero, const T& one) {
    std::size_t n = m.rows();
    Matrix<T> x(n, n, zero);
    for (std::size_t j = 0; j < n; ++j) {
        x(j, j) = one;
        for (std::size_t ii = j; ii-- > 0;) {
            T s = zero;
            for (std::size_t k = ii + 1; k <= j; ++k)
                if (!is_zero(m(ii, k)) && !is_zero(x(k, j))) s += m(ii, k) * x(k, j);
            x(ii, j) = zero - s;
        }
    }
    return x;
}

template <class T>
Matrix<T> unitri_inverse(const Matrix<T>& m, const T& zero, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_unit_one(m(i, i))) throw std::domain_error("matrix is not unitriangular (diagonal)");
    switch (shape_of(m)) {
        case Shape::Upper: return upper_inverse(m, zero, one);
        case Shape::Lower: return upper_inverse(m.transpose(), zero, one).transpose();
        default: throw std::domain_error("matrix is not triangular");
    }
}

}  // namespace

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
    RingPtr ring = a.rows() && a.cols() ? a(0, 0).ring() : RingPtr();
    return mul_generic(a, b, ring);
}

PolyMatrix mul(const PolyMatrix& a, const IntMatrix& b) {
    RingPtr ring = a.rows() && a.cols() ? a(0, 0).ring() : RingPtr();
    return mul_generic(a, b, ring);
}

PolyMatrix mul(const IntMatrix& a, const PolyMatrix& b) {
    RingPtr ring = b.rows() && b.cols() ? b(0, 0).ring() : RingPtr();
    return mul_generic(a, b, ring);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows(), b.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0)
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

PolyMatrix to_poly(const IntMatrix& m, const RingPtr& ring) {
    PolyMatrix p(m.rows(), m.cols(), Poly(ring));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly::constant(ring, m(i, j));
    return p;
}

PolyMatrix unitriangular_inverse(const PolyMatrix& m) {
    RingPtr ring = m(0, 0).ring();
    return unitri_inverse(m, Poly(ring), Poly::constant(ring, 1));
}

IntMatrix unitriangular_inverse(const IntMatrix& m) { return unitri_inverse(m, Int(0), Int(1)); }

std::pair<Poly, std::vector<Poly>> solve_left(const PolyMatrix& a, const std::vector<Poly>& b) {
    // x a = b  <=>  a^T x^T = b^T. Bareiss on the augmented system.
    std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_left shape");
    RingPtr ring = a(0, 0).ring();
    PolyMatrix w(n, n + 1, Poly(ring));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(j, i);
        w(i, n) = b[i];
    }
    Poly prev = Poly::constant(ring, 1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w(piv, k).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j <= n; ++j) std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                w(i, j) = exact_divide(w(k, k) * w(i, j) - w(i, k) * w(k, j), prev);
            w(i, k) = Poly(ring);
        }
        prev = w(k, k);
    }
    Poly det = w(n - 1, n - 1);
    // Back substitution: x_i = (det * w(i,n) - sum_j w(i,j) x_j) / w(i,i), all scaled by det.
    std::vector<Poly> y(n, Poly(ring));
    for (std::size_t ii = n; ii-- > 0;) {
        Poly s = det * w(ii, n);
        for (std::size_t j = ii + 1; j < n; ++j)
            if (!w(ii, j).is_zero()) s -= w(ii, j) * y[j];
        y[ii] = exact_divide(s, w(ii, ii));
    }
    (void)sign;
    return {det, y};
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(jobs, count);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

}  // namespace mpk
