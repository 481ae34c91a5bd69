public class Codec {
    public void encode(Message m, Frame out) {
    }

    public Message decode(Frame f) {
        Message m = new Message();
        m.text = f.payload;
        return m;
    }

    public Frame nextFrame() {
        return new Frame();
    }
}
