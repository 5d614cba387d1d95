#pragma once

// Low-level dense kernels shared by the layer implementations. Not installed.
//
// Every kernel partitions its output so that each element is produced by
// exactly one thread with a fixed sequential accumulation order. Results are
// therefore bitwise identical for any OpenMP thread count.

#include <cstdint>

namespace cxr::kernels {

// C[M,N] (+)= A[M,K] * B[K,N], all row-major.
inline void gemm_nn(std::int64_t M, std::int64_t N, std::int64_t K, const double* A,
                    const double* B, double* C, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < M; ++i) {
    double* c = C + i * N;
    if (!accumulate) {
      for (std::int64_t j = 0; j < N; ++j) c[j] = 0.0;
    }
    const double* a = A + i * K;
    for (std::int64_t k = 0; k < K; ++k) {
      const double av = a[k];
      if (av == 0.0) continue;
      const double* b = B + k * N;
#pragma omp simd
      for (std::int64_t j = 0; j < N; ++j) c[j] += av * b[j];
    }
  }
}

// C[M,N] (+)= A[M,K] * B[N,K]^T (dot products of rows).
inline void gemm_nt(std::int64_t M, std::int64_t N, std::int64_t K, const double* A,
                    const double* B, double* C, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < M; ++i) {
    const double* a = A + i * K;
    double* c = C + i * N;
    for (std::int64_t j = 0; j < N; ++j) {
      const double* b = B + j * K;
      double sum = 0.0;
#pragma omp simd reduction(+ : sum)
      for (std::int64_t k = 0; k < K; ++k) sum += a[k] * b[k];
      c[j] = accumulate ? c[j] + sum : sum;
    }
  }
}

// C[M,N] (+)= A[K,M]^T * B[K,N]. Row i of C accumulates A[k,i] * B[k,:].
inline void gemm_tn(std::int64_t M, std::int64_t N, std::int64_t K, const double* A,
                    const double* B, double* C, bool accumulate) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < M; ++i) {
    double* c = C + i * N;
    if (!accumulate) {
      for (std::int64_t j = 0; j < N; ++j) c[j] = 0.0;
    }
    for (std::int64_t k = 0; k < K; ++k) {
      const double av = A[k * M + i];
      if (av == 0.0) continue;
      const double* b = B + k * N;
#pragma omp simd
      for (std::int64_t j = 0; j < N; ++j) c[j] += av * b[j];
    }
  }
}

// Unpacks conv patches: col[(c*KH+kh)*KW+kw, ((n*OH)+oh)*OW+ow] = x[n,c,ih,iw]
// with ih = oh*stride - pad + kh (0 outside). x is NCHW.
inline void im2col(const double* x, int N, int C, int H, int W, int KH, int KW, int stride,
                   int pad, int OH, int OW, double* col) {
  const std::int64_t cols = static_cast<std::int64_t>(N) * OH * OW;
#pragma omp parallel for schedule(static) collapse(2)
  for (int c = 0; c < C; ++c) {
    for (int kh = 0; kh < KH; ++kh) {
      for (int kw = 0; kw < KW; ++kw) {
        double* dst = col + ((static_cast<std::int64_t>(c) * KH + kh) * KW + kw) * cols;
        for (int n = 0; n < N; ++n) {
          const double* src = x + (static_cast<std::int64_t>(n) * C + c) * H * W;
          for (int oh = 0; oh < OH; ++oh) {
            const int ih = oh * stride - pad + kh;
            double* d = dst + (static_cast<std::int64_t>(n) * OH + oh) * OW;
            if (ih < 0 || ih >= H) {
              for (int ow = 0; ow < OW; ++ow) d[ow] = 0.0;
              continue;
            }
            const double* s = src + static_cast<std::int64_t>(ih) * W;
            for (int ow = 0; ow < OW; ++ow) {
              const int iw = ow * stride - pad + kw;
              d[ow] = (iw >= 0 && iw < W) ? s[iw] : 0.0;
            }
          }
        }
      }
    }
  }
}

// Scatter-adds a column matrix back into NCHW. Each (n,c) plane is owned by
// one thread, so the accumulation order is fixed.
inline void col2im_add(const double* col, int N, int C, int H, int W, int KH, int KW,
                       int stride, int pad, int OH, int OW, double* x) {
  const std::int64_t cols = static_cast<std::int64_t>(N) * OH * OW;
#pragma omp parallel for schedule(static) collapse(2)
  for (int n = 0; n < N; ++n) {
    for (int c = 0; c < C; ++c) {
      double* dst = x + (static_cast<std::int64_t>(n) * C + c) * H * W;
      for (int kh = 0; kh < KH; ++kh) {
        for (int kw = 0; kw < KW; ++kw) {
          const double* src = col + ((static_cast<std::int64_t>(c) * KH + kh) * KW + kw) * cols;
          for (int oh = 0; oh < OH; ++oh) {
            const int ih = oh * stride - pad + kh;
            if (ih < 0 || ih >= H) continue;
            const double* s = src + (static_cast<std::int64_t>(n) * OH + oh) * OW;
            double* d = dst + static_cast<std::int64_t>(ih) * W;
            for (int ow = 0; ow < OW; ++ow) {
              const int iw = ow * stride - pad + kw;
              if (iw >= 0 && iw < W) d[iw] += s[ow];
            }
          }
        }
      }
    }
  }
}

}  // namespace cxr::kernels
