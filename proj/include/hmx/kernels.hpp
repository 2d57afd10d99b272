#pragma once
//
// Dense arithmetic kernels. Every kernel has a scalar reference
// implementation and may have a SIMD variant; the variant is selected once
// at runtime from CPU features (override with HMX_KERNEL=scalar|avx2 or
// force_backend()). All matrices are row-major with an explicit leading
// dimension (stride between rows).
//

#include <cstddef>

namespace hmx::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name();
bool avx2_supported();
void force_backend(Backend b);

double dot(const double* x, const double* y, std::size_t n);
double nrm2sq(const double* x, std::size_t n);

// y += a*x
void axpy(double a, const double* x, double* y, std::size_t n);
// x *= a
void scal(double a, double* x, std::size_t n);

// y := beta*y + alpha*A*x      (A is m x n)
void gemv_n(std::size_t m, std::size_t n, double alpha, const double* a,
            std::size_t lda, const double* x, double beta, double* y);
// y := beta*y + alpha*A^T*x    (A is m x n, y has length n)
void gemv_t(std::size_t m, std::size_t n, double alpha, const double* a,
            std::size_t lda, const double* x, double beta, double* y);
// A += alpha * x * y^T         (A is m x n)
void ger(std::size_t m, std::size_t n, double alpha, const double* x,
         const double* y, double* a, std::size_t lda);

// C := beta*C + alpha*A*B      (A m x k, B k x n)
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, double alpha,
             const double* a, std::size_t lda, const double* b, std::size_t ldb,
             double beta, double* c, std::size_t ldc);
// C := beta*C + alpha*A*B^T    (A m x k, B n x k)
void gemm_nt(std::size_t m, std::size_t n, std::size_t k, double alpha,
             const double* a, std::size_t lda, const double* b, std::size_t ldb,
             double beta, double* c, std::size_t ldc);
// C := beta*C + alpha*A^T*B    (A k x m, B k x n)
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, double alpha,
             const double* a, std::size_t lda, const double* b, std::size_t ldb,
             double beta, double* c, std::size_t ldc);

namespace detail {

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*nrm2sq)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scal)(double, double*, std::size_t);
    void (*gemm_nn)(std::size_t, std::size_t, std::size_t, double, const double*,
                    std::size_t, const double*, std::size_t, double, double*, std::size_t);
    void (*gemm_nt)(std::size_t, std::size_t, std::size_t, double, const double*,
                    std::size_t, const double*, std::size_t, double, double*, std::size_t);
    void (*gemm_tn)(std::size_t, std::size_t, std::size_t, double, const double*,
                    std::size_t, const double*, std::size_t, double, double*, std::size_t);
};

const Vtable* avx2_vtable(); // nullptr when the AVX2 translation unit is not built in

} // namespace detail

} // namespace hmx::kernels
