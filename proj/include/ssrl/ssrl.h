/* C interface to the ssrl denoising library.
 *
 * Every function returns an ssrl_status. On failure the message is available
 * from ssrl_last_error() on the calling thread until the next call. */
#ifndef SSRL_SSRL_H
#define SSRL_SSRL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SSRL_API __declspec(dllexport)
#else
#define SSRL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssrl_status {
  SSRL_OK = 0,
  SSRL_ERR_INTERNAL = 1,
  SSRL_ERR_CONFIG = 2,
  SSRL_ERR_DATA = 3,
  SSRL_ERR_NUMERICAL = 4,
  SSRL_ERR_PRECONDITION = 5
} ssrl_status;

typedef enum ssrl_unit { SSRL_UNIT_HU = 0, SSRL_UNIT_8BIT = 1, SSRL_UNIT_01 = 2 } ssrl_unit;

typedef struct ssrl_image ssrl_image;
typedef struct ssrl_model ssrl_model;

typedef struct ssrl_run_options {
  const char* config_path; /* may be NULL for verify */
  const char* out_dir;     /* NULL: take [output] dir from the config */
  int has_seed;
  uint64_t seed;
} ssrl_run_options;

SSRL_API const char* ssrl_version(void);
SSRL_API const char* ssrl_last_error(void);
/* 0 restores the default worker count. */
SSRL_API ssrl_status ssrl_set_threads(int threads);

SSRL_API ssrl_status ssrl_generate(const ssrl_run_options* opt);
SSRL_API ssrl_status ssrl_train(const ssrl_run_options* opt);
SSRL_API ssrl_status ssrl_denoise(const ssrl_run_options* opt);
SSRL_API ssrl_status ssrl_eval(const ssrl_run_options* opt);
SSRL_API ssrl_status ssrl_select_g(const ssrl_run_options* opt);
SSRL_API ssrl_status ssrl_mask_debug(const ssrl_run_options* opt);
/* suite may be NULL or empty, instances 0 for the config value. failed may
 * be NULL; it receives the number of failing checks. */
SSRL_API ssrl_status ssrl_verify(const ssrl_run_options* opt, const char* suite, size_t instances, size_t* failed);

/* Images: samples are row-major, channel-interleaved doubles. */
SSRL_API ssrl_status ssrl_image_create(size_t height, size_t width, size_t channels, ssrl_unit unit,
                                       const double* samples, ssrl_image** out);
SSRL_API ssrl_status ssrl_image_load(const char* path, ssrl_unit float_unit, ssrl_image** out);
SSRL_API ssrl_status ssrl_image_save(const ssrl_image* img, const char* path);
SSRL_API ssrl_status ssrl_image_shape(const ssrl_image* img, size_t* height, size_t* width, size_t* channels);
SSRL_API const double* ssrl_image_data(const ssrl_image* img);
SSRL_API void ssrl_image_free(ssrl_image* img);

SSRL_API ssrl_status ssrl_corrupt_mixed(const ssrl_image* clean, double lambda, double sigma_eps, double p,
                                        uint64_t seed, ssrl_image** out);
/* Weighted 3x3 median at the given dilation, triggered only on pixels at
 * the ends of the declared range when extremes_only is non-zero. weights may
 * be NULL for the default kernel. */
SSRL_API ssrl_status ssrl_median_filter(const ssrl_image* img, const double* weights9, size_t dilation,
                                        int extremes_only, ssrl_image** out);

SSRL_API ssrl_status ssrl_psnr(const ssrl_image* pred, const ssrl_image* ref, double peak, double* out);
SSRL_API ssrl_status ssrl_ssim(const ssrl_image* pred, const ssrl_image* ref, double peak, double* out);
SSRL_API ssrl_status ssrl_rmse_hu(const ssrl_image* pred, const ssrl_image* ref, double* out);

SSRL_API ssrl_status ssrl_model_load(const char* checkpoint_dir, ssrl_model** out);
SSRL_API ssrl_status ssrl_model_denoise(const ssrl_model* model, const ssrl_image* noisy, ssrl_image** out);
SSRL_API void ssrl_model_free(ssrl_model* model);

#ifdef __cplusplus
}
#endif

#endif
