#include "mulay/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace mulay {

float sample_bilinear(const ImageBuffer& img, double px, double py, int c) {
    const double fx = px - 0.5, fy = py - 0.5;
    int x0 = static_cast<int>(std::floor(fx));
    int y0 = static_cast<int>(std::floor(fy));
    const double tx = fx - x0, ty = fy - y0;
    const auto cl = [](int v, int hi) { return std::clamp(v, 0, hi - 1); };
    const int x1 = cl(x0 + 1, img.width), y1 = cl(y0 + 1, img.height);
    x0 = cl(x0, img.width);
    y0 = cl(y0, img.height);
    const double a = img.at(x0, y0, c), b = img.at(x1, y0, c);
    const double d = img.at(x0, y1, c), e = img.at(x1, y1, c);
    return static_cast<float>((a * (1 - tx) + b * tx) * (1 - ty) +
                              (d * (1 - tx) + e * tx) * ty);
}

float srgb_to_linear(float v) {
    if (v <= 0.04045f) return v / 12.92f;
    return std::pow((v + 0.055f) / 1.055f, 2.4f);
}

float linear_to_srgb(float v) {
    v = std::clamp(v, 0.f, 1.f);
    if (v <= 0.0031308f) return v * 12.92f;
    return 1.055f * std::pow(v, 1.f / 2.4f) - 0.055f;
}

ImageBuffer load_png(const std::string& path, bool linearize) {
    FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error("cannot open PNG file: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error("PNG decode error: " + path);
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const int width = png_get_image_width(png, info);
    const int height = png_get_image_height(png, info);
    const png_byte colorType = png_get_color_type(png, info);
    const png_byte bitDepth = png_get_bit_depth(png, info);

    if (bitDepth == 16) png_set_strip_16(png);
    if (colorType == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (colorType == PNG_COLOR_TYPE_GRAY && bitDepth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    const int rowBytes = static_cast<int>(png_get_rowbytes(png, info));
    const int channels = rowBytes / width;
    std::vector<png_byte> raw(static_cast<size_t>(rowBytes) * height);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = raw.data() + static_cast<size_t>(y) * rowBytes;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);

    const int outC = channels >= 3 ? 3 : 1;
    ImageBuffer img(width, height, outC);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int c = 0; c < outC; ++c) {
                float v = raw[(static_cast<size_t>(y) * width + x) * channels + c] / 255.f;
                img.at(x, y, c) = linearize ? srgb_to_linear(v) : v;
            }
        }
    }
    return img;
}

void save_png(const ImageBuffer& img, const std::string& path, bool srgbEncode,
              const ImageBuffer* alpha) {
    if (img.channels != 1 && img.channels != 3)
        throw std::runtime_error("save_png: channels must be 1 or 3");
    FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("cannot write PNG file: " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        throw std::runtime_error("PNG encode error: " + path);
    }
    png_init_io(png, fp);

    const bool withAlpha = alpha != nullptr;
    int pngType;
    if (img.channels == 1)
        pngType = withAlpha ? PNG_COLOR_TYPE_GRAY_ALPHA : PNG_COLOR_TYPE_GRAY;
    else
        pngType = withAlpha ? PNG_COLOR_TYPE_RGB_ALPHA : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, img.width, img.height, 8, pngType, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const int outC = img.channels + (withAlpha ? 1 : 0);
    std::vector<png_byte> row(static_cast<size_t>(img.width) * outC);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                const float v = srgbEncode ? linear_to_srgb(img.at(x, y, c))
                                           : std::clamp(img.at(x, y, c), 0.f, 1.f);
                row[static_cast<size_t>(x) * outC + c] =
                    static_cast<png_byte>(std::lround(v * 255.f));
            }
            if (withAlpha)
                row[static_cast<size_t>(x) * outC + img.channels] = static_cast<png_byte>(
                    std::lround(std::clamp(alpha->at(x, y, 0), 0.f, 1.f) * 255.f));
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

ImageBuffer load_pfm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PFM file: " + path);
    std::string magic;
    in >> magic;
    if (magic != "PF" && magic != "Pf")
        throw std::runtime_error("not a PFM file: " + path);
    int width, height;
    double scale;
    in >> width >> height >> scale;
    in.get(); // single whitespace before raster
    if (scale > 0) throw std::runtime_error("big-endian PFM unsupported: " + path);
    const int channels = (magic == "PF") ? 3 : 1;
    ImageBuffer img(width, height, channels);
    std::vector<float> row(static_cast<size_t>(width) * channels);
    // PFM rows are stored bottom-up.
    for (int y = height - 1; y >= 0; --y) {
        in.read(reinterpret_cast<char*>(row.data()), row.size() * sizeof(float));
        if (!in) throw std::runtime_error("truncated PFM file: " + path);
        std::memcpy(&img.data[(static_cast<size_t>(y) * width) * channels], row.data(),
                    row.size() * sizeof(float));
    }
    return img;
}

void save_pfm(const ImageBuffer& img, const std::string& path) {
    if (img.channels != 1 && img.channels != 3)
        throw std::runtime_error("save_pfm: channels must be 1 or 3");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write PFM file: " + path);
    out << (img.channels == 3 ? "PF" : "Pf") << "\n"
        << img.width << " " << img.height << "\n-1.0\n";
    for (int y = img.height - 1; y >= 0; --y)
        out.write(reinterpret_cast<const char*>(
                      &img.data[(static_cast<size_t>(y) * img.width) * img.channels]),
                  static_cast<std::streamsize>(img.width) * img.channels * sizeof(float));
}

} // namespace mulay
