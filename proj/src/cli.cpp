// placeholder until the CLI layer lands
namespace gentle {}

