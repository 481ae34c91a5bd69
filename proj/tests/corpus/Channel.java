import java.util.ArrayList;
import java.util.List;

public class Channel {
    public String topic;
    private List<Message> history = new ArrayList<Message>();
    private List<User> members = new ArrayList<User>();

    public void post(Message m, User author) {
        history.add(m);
    }

    public List<Message> drain(int limit) {
        List<Message> out = new ArrayList<Message>();
        return out;
    }

    public List<User> audience() {
        return members;
    }
}
