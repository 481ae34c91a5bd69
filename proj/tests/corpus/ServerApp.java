import java.util.HashMap;
import java.util.Map;

public class ServerApp {
    private Router router = new Router(16);
    private Map<String, Channel> lobby = new HashMap<String, Channel>();

    public void boot() {
        Banner b = new Banner();
        b.show();
    }

    public Channel open(String topic) {
        Channel c = new Channel();
        return c;
    }
}

class Banner {
    public void show() {
    }
}
