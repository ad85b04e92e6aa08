#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rliac/core/geometry.hpp"
#include "rliac/core/image.hpp"
#include "rliac/core/rng.hpp"

namespace rliac::world {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnreachableRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CameraSpec {
    double height_m = 1.0;
    double tilt_rad = 20.0 * 3.14159265358979323846 / 180.0;  // downward pitch
    double hfov_rad = 60.0 * 3.14159265358979323846 / 180.0;
    int image_width = 160;
    int image_height = 120;
    int downsample = 8;  // feature grid factor; must divide both image dims
};

/// Axis-aligned vertical rectangle: either x0 == x1 or y0 == y1.
/// Base sits on the floor, top at floor_z + height.
struct WallSpec {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    double height = 2.5;
};

struct ObjectSpec {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // footprint (m)
    double height = 0.5;
    int class_id = 1;
    int region_hint = -1;  // optional, informational only
};

enum class AreaMode { Informative, Empty, Noisy };

/// Named group of proto-regions, given as a world-coordinate rectangle;
/// a proto-region belongs to the last area whose rectangle contains its
/// center (later lines win).
struct AreaSpec {
    std::string name;
    AreaMode mode = AreaMode::Informative;
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

struct WorldSpec {
    double floor_z = 0.0;
    double x0 = 0, y0 = 0, x1 = 10, y1 = 10;  // floor extent (m)
    std::vector<WallSpec> walls;
    std::vector<ObjectSpec> objects;
    std::vector<AreaSpec> areas;
    std::uint64_t appearance_seed = 0;
    CameraSpec camera;

    double min_object_diag_m = 0.10;
    double max_object_diag_m = 1.80;
    double appearance_noise_sigma = 0.05;
    double depth_dropout_fraction = 0.10;  // fraction of object pixels losing depth
};

struct CameraPose {
    double x = 0, y = 0;
    double heading = 0;  // rad, 0 = +x
};

/// One synthetic RGB-D observation. depth == 0 marks unavailable pixels.
struct Frame {
    ImageF depth;
    Image3F appearance;
    ImageU8 gt_mask;  // 1 where the nearest hit is an object
    CameraPose pose;
    double timestamp = 0.0;
    std::int64_t id = 0;
};

struct Rgb {
    float r = 0, g = 0, b = 0;
};

class World {
public:
    explicit World(WorldSpec spec);

    const WorldSpec& spec() const { return spec_; }

    /// True when (x, y) is outside the floor extent or inside an object
    /// footprint (with a small clearance margin).
    bool pose_collides(double x, double y, double clearance = 0.05) const;

    /// Area mode at a world position (last matching area wins; the implicit
    /// default is informative).
    AreaMode area_mode_at(double x, double y) const;
    /// Name of the area at a position ("default" when no area matches).
    const std::string& area_name_at(double x, double y) const;

    Rgb class_palette(int class_id) const;
    const Rgb& floor_color() const { return floor_color_; }
    const Rgb& wall_color() const { return wall_color_; }
    bool object_is_noisy(std::size_t index) const { return noisy_object_[index]; }

    const std::vector<Box3>& object_boxes() const { return object_boxes_; }

    // Per-pixel unit rays in camera coordinates (planar x/y/z).
    const std::vector<float>& ray_dir_x() const { return ray_x_; }
    const std::vector<float>& ray_dir_y() const { return ray_y_; }
    const std::vector<float>& ray_dir_z() const { return ray_z_; }

    /// Row-major camera-to-world rotation and camera origin for a pose.
    void camera_basis(const CameraPose& pose, std::array<float, 9>& rot, std::array<float, 3>& origin) const;

private:
    WorldSpec spec_;
    std::vector<Box3> object_boxes_;
    std::vector<bool> noisy_object_;
    Rgb floor_color_, wall_color_;
    std::vector<float> ray_x_, ray_y_, ray_z_;
    std::string default_area_name_ = "default";
};

/// Validates the spec and precomputes palettes and the camera ray table.
World build_world(const WorldSpec& spec);

/// Raycasts one frame. Pure in (world, pose, rng state): identical inputs
/// produce bit-identical frames.
Frame render_frame(const World& world, const CameraPose& pose, Rng& rng);

/// Free cells of one region, in world coordinates.
struct FreeCells {
    std::vector<Vec2> centers;
    double cell_size = 0.1;
};

/// Uniform pose over a region's free cells: cell first, then a point within
/// it; poses colliding with objects are rejection-resampled. Throws
/// UnreachableRegion when the retry budget runs out.
CameraPose sample_pose_in_region(const World& world, const FreeCells& cells, Rng& rng, int max_tries = 100);

WorldSpec read_world_spec(const std::string& path);

}  // namespace rliac::world
