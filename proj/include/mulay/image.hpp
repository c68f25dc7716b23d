#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mulay {

// Row-major float image, channel-interleaved. Values are linear [0,1] for
// color/mask content and unbounded for distance maps / shading.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int channels = 1; // 1 or 3
    std::vector<float> data;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int c, float fill = 0.f)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {}

    float& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    bool inside(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    size_t pixelCount() const { return static_cast<size_t>(width) * height; }
    bool sameShape(const ImageBuffer& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

// Bilinear sample of channel c at continuous pixel coordinates (px, py),
// where (0.5, 0.5) is the center of pixel (0,0). Clamped at borders.
float sample_bilinear(const ImageBuffer& img, double px, double py, int c = 0);

// sRGB transfer functions (exact piecewise curve).
float srgb_to_linear(float v);
float linear_to_srgb(float v);

// PNG, 8-bit gray or RGB(A). Color content is stored sRGB-encoded and
// linearized on load; pass linearize=false for masks and label images.
ImageBuffer load_png(const std::string& path, bool linearize = true);
void save_png(const ImageBuffer& img, const std::string& path, bool srgbEncode = true,
              const ImageBuffer* alpha = nullptr);

// PFM, little-endian float, 1 or 3 channels, bottom-up per convention.
ImageBuffer load_pfm(const std::string& path);
void save_pfm(const ImageBuffer& img, const std::string& path);

} // namespace mulay
